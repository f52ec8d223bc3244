#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "aper/limits.hpp"
#include "aper/monoid.hpp"
#include "aper/term.hpp"

namespace aper {

inline constexpr int kEpsilon = -1;

/// Nondeterministic finite automaton with ε-moves. Letters are stored as
/// indices into the alphabet.
struct Nfa {
  Alphabet alphabet;
  int num_states = 0;
  std::vector<std::array<int, 3>> transitions;  // {from, letter index or kEpsilon, to}
  std::vector<int> initial;
  std::vector<int> accepting;
};

/// Complete deterministic automaton. After minimize() the numbering is the
/// canonical BFS order from the initial state with letters in alphabet order,
/// so language-equal inputs minimize to structurally identical values.
struct Dfa {
  Alphabet alphabet;
  int num_states = 0;
  std::vector<std::vector<int>> next;  // [state][letter]
  int initial = 0;
  std::vector<bool> accepting;

  bool operator==(const Dfa& other) const {
    return alphabet == other.alphabet && num_states == other.num_states &&
           next == other.next && initial == other.initial &&
           accepting == other.accepting;
  }
};

Nfa empty_language(const Alphabet& alphabet);
Nfa from_words(const std::set<std::string>& words, const Alphabet& alphabet);
Nfa union_of(const Nfa& x, const Nfa& y);
Nfa concat(const Nfa& x, const Nfa& y);
Nfa star(const Nfa& x);
Nfa reverse(const Nfa& x);

/// a⁻¹L = {u : au ∈ L} and La⁻¹ = {u : ua ∈ L}.
Nfa left_quotient(const Nfa& x, char a);
Nfa right_quotient(const Nfa& x, char a);

/// Homomorphic image: each letter transition is replaced by the path spelling
/// its image word over `target`. Every letter labelling a transition of x
/// must have an image.
Nfa image(const Nfa& x, const std::map<char, std::string>& word_images,
          const Alphabet& target);

/// L ∩ keep*: drops transitions labelled outside `keep`.
Nfa restrict_letters(const Nfa& x, const std::set<char>& keep);

Dfa determinize(const Nfa& x,
                std::size_t state_cap = Limits{}.dfa_state_cap);
Dfa minimize(const Dfa& d);
bool equivalent(const Dfa& a, const Dfa& b);
bool contains(const Dfa& d, std::string_view word);

/// Accepted words of length ≤ maxlen, in length-major order, alphabet-lex
/// within a length.
std::vector<std::string> enumerate_words(const Dfa& d, std::size_t maxlen);

struct TransitionMonoidResult {
  FiniteMonoid monoid;
  std::map<char, int> letter_to_element;
};

/// Monoid of state transformations generated by the letters. On a minimal
/// DFA this is the syntactic monoid. Elements are labelled by the shortest
/// generating word (the identity by "1").
TransitionMonoidResult transition_monoid(
    const Dfa& d, std::size_t element_cap = Limits{}.monoid_cap);

/// Line-oriented text format; sink states are pruned from the output and the
/// remaining states renumbered in BFS order.
std::string to_text(const Dfa& d);
std::string to_dot(const Dfa& d);

}  // namespace aper
