#pragma once

#include <cstddef>

namespace aper {

/// Resource caps. Everything is overridable from the CLI; the defaults are
/// desk-scale guards against tower-fast growth of the class tables.
struct Limits {
  std::size_t class_cap = 5'000'000;     // interned k-classes per depth
  std::size_t monoid_cap = 100'000;      // monoid elements (quotient, transition)
  std::size_t dfa_state_cap = 100'000;   // DFA states after determinization
  std::size_t word_length_cap = 1'000'000;  // unfoldings, expanded powers
  std::size_t oracle_length_cap = 64;    // EF game oracle word length
};

}  // namespace aper
