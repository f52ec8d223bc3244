#pragma once

#include <random>
#include <vector>

#include "aper/term.hpp"

namespace testsupport {

// Random ω-term with ω-nesting depth ≤ omega_depth. May return ε.
inline aper::TermPtr random_term(std::mt19937& rng, const aper::Alphabet& a,
                                 int omega_depth, int budget = 6) {
  using aper::Term;
  std::uniform_int_distribution<int> letter_pick(
      0, static_cast<int>(a.size()) - 1);
  if (budget <= 1) return Term::letter(a.letter(letter_pick(rng)));
  std::uniform_int_distribution<int> kind_pick(0, 9);
  int kind = kind_pick(rng);
  if (kind < 4) return Term::letter(a.letter(letter_pick(rng)));
  if (kind < 7) {
    std::uniform_int_distribution<int> arity(2, 3);
    int n = arity(rng);
    std::vector<aper::TermPtr> parts;
    for (int i = 0; i < n; ++i)
      parts.push_back(random_term(rng, a, omega_depth, budget / n));
    return Term::concat(std::move(parts));
  }
  if (kind < 8) {
    std::uniform_int_distribution<std::uint64_t> exponent(2, 4);
    return Term::power(random_term(rng, a, omega_depth, budget - 1),
                       exponent(rng));
  }
  if (omega_depth > 0)
    return Term::omega(random_term(rng, a, omega_depth - 1, budget - 1));
  return Term::letter(a.letter(letter_pick(rng)));
}

// Nonempty variant (for non-erasing substitution images).
inline aper::TermPtr random_nonempty_term(std::mt19937& rng,
                                          const aper::Alphabet& a,
                                          int omega_depth, int budget = 6) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    aper::TermPtr t = random_term(rng, a, omega_depth, budget);
    if (t->kind() != aper::TermKind::Empty) return t;
  }
  return aper::Term::letter(a.letter(0));
}

// Rewrites t by identities of the ω-term theory, so the result denotes the
// same element: x^ω ↦ x x^ω | x^ω x | x^ω x^ω | (x^n)^ω | (x^ω)^ω.
inline aper::TermPtr inflate(std::mt19937& rng, const aper::TermPtr& t) {
  using aper::Term;
  using aper::TermKind;
  switch (t->kind()) {
    case TermKind::Empty:
    case TermKind::Letter:
      return t;
    case TermKind::Concat: {
      std::vector<aper::TermPtr> parts;
      for (const auto& child : t->children()) parts.push_back(inflate(rng, child));
      return Term::concat(std::move(parts));
    }
    case TermKind::Power:
      return Term::power(inflate(rng, t->base()), t->exponent());
    case TermKind::Omega: {
      aper::TermPtr base = inflate(rng, t->base());
      aper::TermPtr omega = Term::omega(base);
      std::uniform_int_distribution<int> pick(0, 5);
      switch (pick(rng)) {
        case 0:
          return Term::concat({base, omega});
        case 1:
          return Term::concat({omega, base});
        case 2:
          return Term::concat({omega, omega});
        case 3: {
          std::uniform_int_distribution<std::uint64_t> exponent(2, 3);
          return Term::omega(Term::power(base, exponent(rng)));
        }
        case 4:
          return Term::omega(omega);
        default:
          return omega;
      }
    }
  }
  return t;
}

}  // namespace testsupport
