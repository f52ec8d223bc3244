#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aper/errors.hpp"
#include "aper/limits.hpp"
#include "aper/monoid.hpp"
#include "aper/term.hpp"

namespace aper {

/// Interned identifier of a ≡_k class of finite words. Only meaningful
/// inside the engine that produced it; compare ids within one engine.
struct KClass {
  int depth = 0;
  std::uint32_t id = 0;

  bool operator==(const KClass& o) const { return depth == o.depth && id == o.id; }
  bool operator!=(const KClass& o) const { return !(*this == o); }
};

/// F_A(A)_k as an explicit multiplication table, with the letter generators
/// and the engine class behind each element.
struct QuotientMonoid {
  FiniteMonoid monoid;
  std::map<char, int> letter_to_element;
  std::vector<KClass> classes;
};

/// Computes ≡_k classes of finite words over one alphabet.
///
/// A class at depth k ≥ 1 is the set of triples
///   (class of the prefix left of i at depth k-1, letter at i,
///    class of the suffix right of i at depth k-1)
/// realized by the word's positions; two words carry the same triple set iff
/// they satisfy the same sentences of quantifier depth ≤ k. Depth 0 has a
/// single class, and the empty word is alone in its class at every k ≥ 1
/// (its triple set is empty).
///
/// The engine memoizes interning and products and is confined to one thread
/// of control at a time; distinct engines are independent.
class KClassEngine {
 public:
  explicit KClassEngine(Alphabet alphabet, Limits limits = {});

  const Alphabet& alphabet() const { return alphabet_; }
  const Limits& limits() const { return limits_; }

  KClass classify(std::string_view word, int depth);
  KClass empty_class(int depth) { return classify({}, depth); }
  KClass letter_class(char c, int depth);

  /// Class of rep(x)·rep(y); well defined because ≡_k is a congruence.
  KClass mul(KClass x, KClass y);
  KClass power(KClass x, std::uint64_t n);

  /// π_k of an ω-power: x^(2^k - 1), with exponent floor 1 at depth 0.
  KClass omega(KClass x);

  /// π_k of an ω-term, by structural recursion. Equals
  /// classify(unfold(t, 2^k - 1), k).
  KClass project(const Term& t, int depth);

  const std::string& representative(KClass c) const;
  std::size_t num_classes(int depth) const;

  /// BFS closure of {class(ε,k)} ∪ {class(a,k)} under mul.
  QuotientMonoid quotient_monoid(int depth);

  /// k-round EF game on (u, v), searched directly on the words: player ∀
  /// opens at any position of either word, player ∃ must answer with a
  /// position carrying the same letter whose left and right rays win the
  /// (k-1)-round games. Independent of classify/mul, used as its oracle.
  bool ef_game_oracle(std::string_view u, std::string_view v, int depth);

  /// Word comparison in declared alphabet order (used for representative
  /// tie-breaking).
  bool word_less(std::string_view a, std::string_view b) const;

 private:
  struct Triple {
    std::uint32_t left;
    std::uint32_t right;
    char letter;
    bool operator<(const Triple& o) const {
      if (left != o.left) return left < o.left;
      if (right != o.right) return right < o.right;
      return letter < o.letter;
    }
    bool operator==(const Triple& o) const {
      return left == o.left && right == o.right && letter == o.letter;
    }
  };
  struct ClassInfo {
    std::vector<Triple> triples;
    std::string rep;
  };

  void ensure_depth(int depth);
  KClass intern(int depth, std::vector<Triple> triples, std::string_view word);
  void check_word(std::string_view word) const;
  bool ef_rec(const std::string& u, const std::string& v, int depth);

  Alphabet alphabet_;
  Limits limits_;
  std::vector<std::vector<ClassInfo>> classes_;               // [depth][id]
  std::vector<std::map<std::vector<Triple>, std::uint32_t>> interned_;
  std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> mul_memo_;
  std::unordered_map<std::string, bool> oracle_memo_;
};

}  // namespace aper
