#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "aper/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures for ω-terms over the free pro-aperiodic "
               "monoid: word problem via canonical forms, ≡_k projections, "
               "prefix/suffix/factor languages and regular J-classes"};
  app.require_subcommand(1);

  aper::cli::Config config;
  app.add_option("-A,--alphabet", config.alphabet,
                 "Alphabet (ordered, distinct lowercase letters)")
      ->capture_default_str();
  app.add_option("--cap-class", config.limits.class_cap,
                 "Interned class cap per depth")
      ->capture_default_str();
  app.add_option("--cap-monoid-elements", config.limits.monoid_cap,
                 "Monoid element cap")
      ->capture_default_str();
  app.add_option("--cap-dfa-states", config.limits.dfa_state_cap,
                 "DFA state cap")
      ->capture_default_str();
  app.add_option("--cap-word-length", config.limits.word_length_cap,
                 "Word length / normal-form size cap")
      ->capture_default_str();
  app.add_option("--cap-oracle-length", config.limits.oracle_length_cap,
                 "EF game oracle word length bound")
      ->capture_default_str();

  std::string term1, term2, which = "prefix", monoid_path, assignment;
  int depth = 1;
  std::uint64_t unfold_n = 1;

  auto* eq = app.add_subcommand("eq", "Decide equality of two ω-terms");
  eq->add_option("left", term1, "First term")->required();
  eq->add_option("right", term2, "Second term")->required();
  eq->add_option("--kmax", config.kmax, "Bound for the separating depth search")
      ->capture_default_str();
  eq->add_option("--kcheck", config.check_depth,
                 "Cross-check depth for EQUAL answers")
      ->capture_default_str();
  eq->add_flag("--no-crosscheck",
               [&config](std::int64_t) { config.cross_check = false; },
               "Skip the ≡_k cross-check (fast path)");

  auto* canon = app.add_subcommand("canon", "Print the canonical form");
  canon->add_option("term", term1, "Term")->required();

  auto* project = app.add_subcommand("project", "Print the ≡_k class of a term");
  project->add_option("term", term1, "Term")->required();
  project->add_option("-k,--depth", depth, "Quantifier depth")->required();

  auto* factors = app.add_subcommand(
      "factors", "Print the minimal DFA of a prefix/suffix/factor language");
  factors->add_option("term", term1, "Term")->required();
  factors->add_option("--which", which, "prefix | suffix | factor")
      ->capture_default_str();
  factors->add_option("--format", config.format, "text | dot")
      ->capture_default_str();

  auto* regjs = app.add_subcommand("regjs", "List regular J-classes above a term");
  regjs->add_option("term", term1, "Term")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a term in a finite monoid");
  eval->add_option("term", term1, "Term")->required();
  eval->add_option("--monoid", monoid_path, "Monoid file")->required();
  eval->add_option("--assign", assignment, "letter=element,... assignment")
      ->required();

  auto* quotient =
      app.add_subcommand("quotient", "Print the quotient monoid F_A(A)_k");
  quotient->add_option("-k,--depth", depth, "Quantifier depth")->required();

  auto* unfold = app.add_subcommand("unfold", "Replace ω-powers by n-th powers");
  unfold->add_option("term", term1, "Term")->required();
  unfold->add_option("-n", unfold_n, "Unfolding exponent (≥ 1)")->required();

  for (auto* sub : {eq, canon, project, factors, regjs, eval, quotient, unfold})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (eq->parsed())
    return aper::cli::cmd_eq(config, term1, term2, std::cout, std::cerr);
  if (canon->parsed())
    return aper::cli::cmd_canon(config, term1, std::cout, std::cerr);
  if (project->parsed())
    return aper::cli::cmd_project(config, term1, depth, std::cout, std::cerr);
  if (factors->parsed())
    return aper::cli::cmd_factors(config, term1, which, std::cout, std::cerr);
  if (regjs->parsed())
    return aper::cli::cmd_regjs(config, term1, std::cout, std::cerr);
  if (eval->parsed())
    return aper::cli::cmd_eval(config, term1, monoid_path, assignment,
                               std::cout, std::cerr);
  if (quotient->parsed())
    return aper::cli::cmd_quotient(config, depth, std::cout, std::cerr);
  if (unfold->parsed())
    return aper::cli::cmd_unfold(config, term1, unfold_n, std::cout, std::cerr);
  return 2;
}
