#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "aper/errors.hpp"
#include "aper/limits.hpp"

namespace aper {

/// Ordered finite alphabet of single lowercase letters. The declaration
/// order is fixed at construction and used for all tie-breaking.
class Alphabet {
 public:
  explicit Alphabet(std::string_view letters);

  bool contains(char c) const { return index_[static_cast<unsigned char>(c)] >= 0; }
  int index(char c) const { return index_[static_cast<unsigned char>(c)]; }
  std::size_t size() const { return letters_.size(); }
  char letter(std::size_t i) const { return letters_[i]; }
  const std::string& letters() const { return letters_; }

  bool operator==(const Alphabet& other) const { return letters_ == other.letters_; }

 private:
  std::string letters_;
  int index_[256];
};

enum class TermKind { Empty, Letter, Concat, Omega, Power };

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Immutable ω-term AST node. Built only through the smart constructors,
/// which normalize associativity and units:
///   - Concat is flattened and n-ary (no nested Concat, no ε children);
///   - Power exponents 0 and 1 are eliminated;
///   - ε^ω and ε^n collapse to ε.
/// No algebraic identities beyond units are applied here; semantic
/// identification lives in the normal-form engine.
class Term {
 public:
  TermKind kind() const { return kind_; }
  char letter() const { return letter_; }
  const std::vector<TermPtr>& children() const { return children_; }
  const TermPtr& base() const { return base_; }
  std::uint64_t exponent() const { return exponent_; }

  static const TermPtr& empty();
  static TermPtr letter(char c);
  static TermPtr concat(std::vector<TermPtr> parts);
  static TermPtr omega(TermPtr base);
  static TermPtr power(TermPtr base, std::uint64_t n);

 private:
  Term(TermKind kind, char letter, std::vector<TermPtr> children, TermPtr base,
       std::uint64_t exponent)
      : kind_(kind),
        letter_(letter),
        exponent_(exponent),
        children_(std::move(children)),
        base_(std::move(base)) {}

  static TermPtr make(TermKind kind, char letter, std::vector<TermPtr> children,
                      TermPtr base, std::uint64_t exponent);

  TermKind kind_;
  char letter_ = 0;
  std::uint64_t exponent_ = 0;
  std::vector<TermPtr> children_;
  TermPtr base_;
};

bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

/// Parses the term grammar (whitespace ignored):
///   term    := "1" | seq ;
///   seq     := factor { factor } ;
///   factor  := atom [ "^" ( "w" | INTEGER ) ] ;
///   atom    := LETTER | "(" seq ")" ;
/// Throws ParseError on syntax errors and letters outside the alphabet.
TermPtr parse(std::string_view text, const Alphabet& alphabet);

/// Prints a term so that parse(print(t)) is structurally equal to t.
std::string print(const Term& t);
inline std::string print(const TermPtr& t) { return print(*t); }

/// Replaces every letter b by images.at(b), re-normalized by the smart
/// constructors; the syntactic side of a substitution Λ(B) → Λ(A).
TermPtr substitute(const Term& t, const std::map<char, TermPtr>& images);

/// Set of letters occurring in t.
std::set<char> content(const Term& t);

/// The flattened finite word, if t contains no ω-power of a nonempty base.
std::optional<std::string> is_finite_word(
    const Term& t, std::size_t length_cap = Limits{}.word_length_cap);

/// Letter-wise mirror image of t.
TermPtr reversed(const Term& t);

std::size_t omega_node_count(const Term& t);

}  // namespace aper
