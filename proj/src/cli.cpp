#include "aper/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "aper/automata.hpp"
#include "aper/errors.hpp"
#include "aper/factor_langs.hpp"
#include "aper/kclass.hpp"
#include "aper/monoid.hpp"
#include "aper/normal_form.hpp"
#include "aper/term.hpp"

namespace aper::cli {

namespace {

std::string rep_or_one(const std::string& rep) {
  return rep.empty() ? "1" : rep;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int cmd_eq(const Config& config, const std::string& left,
           const std::string& right, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Alphabet alphabet(config.alphabet);
    TermPtr t1 = parse(left, alphabet);
    TermPtr t2 = parse(right, alphabet);
    KClassEngine engine(alphabet, config.limits);
    EqualOptions options;
    options.engine = &engine;
    options.cross_check = config.cross_check;
    options.check_depth = config.check_depth;
    options.limits = config.limits;
    bool same = equal(*t1, *t2, alphabet, options);
    if (same) {
      out << "EQUAL\n";
      out << "canonical(1) = " << canonicalize(*t1, config.limits.word_length_cap).to_string() << "\n";
      out << "canonical(2) = " << canonicalize(*t2, config.limits.word_length_cap).to_string() << "\n";
      return 0;
    }
    auto witness = separate(*t1, *t2, config.kmax, engine);
    if (witness) {
      out << "DISTINCT at k=" << witness->depth << ": rep '"
          << rep_or_one(engine.representative(witness->first)) << "' vs '"
          << rep_or_one(engine.representative(witness->second)) << "'\n";
    } else {
      out << "DISTINCT (no ≡_k witness ≤ " << config.kmax << ")\n";
    }
    out << "canonical(1) = " << canonicalize(*t1, config.limits.word_length_cap).to_string() << "\n";
    out << "canonical(2) = " << canonicalize(*t2, config.limits.word_length_cap).to_string() << "\n";
    return 1;
  });
}

int cmd_canon(const Config& config, const std::string& term, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    Alphabet alphabet(config.alphabet);
    TermPtr t = parse(term, alphabet);
    out << canonicalize(*t, config.limits.word_length_cap).to_string() << "\n";
    return 0;
  });
}

int cmd_project(const Config& config, const std::string& term, int depth,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Alphabet alphabet(config.alphabet);
    TermPtr t = parse(term, alphabet);
    KClassEngine engine(alphabet, config.limits);
    KClass c = engine.project(*t, depth);
    out << "k=" << c.depth << " class=" << c.id << " rep="
        << rep_or_one(engine.representative(c)) << "\n";
    return 0;
  });
}

int cmd_factors(const Config& config, const std::string& term,
                const std::string& which, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    Alphabet alphabet(config.alphabet);
    TermPtr t = parse(term, alphabet);
    Dfa dfa = [&] {
      if (which == "prefix") return prefix_lang(*t, alphabet, config.limits);
      if (which == "suffix") return suffix_lang(*t, alphabet, config.limits);
      if (which == "factor") return factor_lang(*t, alphabet, config.limits);
      throw std::invalid_argument("unknown language kind '" + which +
                                  "' (expected prefix, suffix or factor)");
    }();
    out << (config.format == "dot" ? to_dot(dfa) : to_text(dfa));
    return 0;
  });
}

int cmd_regjs(const Config& config, const std::string& term, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    Alphabet alphabet(config.alphabet);
    TermPtr t = parse(term, alphabet);
    KClassEngine engine(alphabet, config.limits);
    for (const auto& entry : regular_jclasses(*t, engine)) {
      out << entry.form.to_string();
      if (entry.unverified) out << " UNVERIFIED";
      out << "\n";
    }
    return 0;
  });
}

int cmd_eval(const Config& config, const std::string& term,
             const std::string& monoid_path, const std::string& assignment,
             std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Alphabet alphabet(config.alphabet);
    TermPtr t = parse(term, alphabet);
    std::ifstream in(monoid_path);
    if (!in) throw std::runtime_error("cannot open monoid file '" + monoid_path + "'");
    FiniteMonoid m = read_monoid(in, 200, &err);
    if (!is_aperiodic(m))
      err << "warning: monoid is not aperiodic; the ω-power is still the "
             "idempotent power\n";
    std::map<char, int> h;
    std::istringstream parts(assignment);
    std::string item;
    while (std::getline(parts, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos || eq != 1)
        throw std::invalid_argument("bad assignment entry '" + item +
                                    "' (expected letter=index)");
      h[item[0]] = std::stoi(item.substr(eq + 1));
    }
    int element = evaluate(*t, m, h);
    out << element;
    if (!m.labels.empty() && !m.labels[element].empty())
      out << ' ' << m.labels[element];
    out << "\n";
    return 0;
  });
}

int cmd_quotient(const Config& config, int depth, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    Alphabet alphabet(config.alphabet);
    KClassEngine engine(alphabet, config.limits);
    QuotientMonoid q = engine.quotient_monoid(depth);
    out << write_monoid(q.monoid);
    return 0;
  });
}

int cmd_unfold(const Config& config, const std::string& term, std::uint64_t n,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Alphabet alphabet(config.alphabet);
    TermPtr t = parse(term, alphabet);
    std::string word = unfold(*t, n, config.limits.word_length_cap);
    out << (word.empty() ? "1" : word) << "\n";
    return 0;
  });
}

}  // namespace aper::cli
