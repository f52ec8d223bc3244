#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aper/kclass.hpp"
#include "aper/limits.hpp"
#include "aper/term.hpp"

namespace aper {

struct NfItem;
using NfSeq = std::vector<NfItem>;

/// One item of a normal-form sequence: a letter, or an ω-power of a
/// normal-form sequence of strictly lower rank structure.
struct NfItem {
  bool is_omega = false;
  char letter = 0;
  int rank = 0;  // letters have rank 0, ω-powers 1 + rank of the base
  NfSeq base;    // nonempty iff is_omega

  static NfItem make_letter(char c);
  static NfItem make_omega(NfSeq base);
};

int rank_of(const NfSeq& seq);

/// Total order used for cyclic minimality: (rank, letter < ω-power,
/// recursive lexicographic), extended lexicographically to sequences.
int compare(const NfItem& a, const NfItem& b);
int compare(const NfSeq& a, const NfSeq& b);
bool operator==(const NfItem& a, const NfItem& b);
inline bool operator!=(const NfItem& a, const NfItem& b) { return !(a == b); }

/// Rank-stratified normal form of an ω-term; a finite code for the countably
/// saturated word the term denotes, unique up to the rewrite strategy in
/// canonicalize(). The empty sequence is the empty word.
class NormalForm {
 public:
  NormalForm() = default;
  explicit NormalForm(NfSeq items) : items_(std::move(items)) {}

  const NfSeq& items() const { return items_; }
  TermPtr to_term() const;
  std::string to_string() const { return print(*to_term()); }

  bool operator==(const NormalForm& o) const {
    return compare(items_, o.items_) == 0;
  }
  bool operator!=(const NormalForm& o) const { return !(*this == o); }

 private:
  NfSeq items_;
};

/// Rewrites t to normal form, innermost first:
///   R1  (x^ω)^ω → x^ω
///   R2  x^ω x^ω → x^ω
///   R3  x x^ω → x^ω and x^ω x → x^ω, across item boundaries
///   R4  (x^n)^ω → x^ω for any proper repetition, at every rank
///   R5  base rotated to its cyclically least form, commuting the context
///       through (xy)^ω x = x(yx)^ω
/// Integer powers are expanded (subject to size_cap). Each rewrite is an
/// isomorphism of the denoted saturated words, so the normal form denotes
/// the same element as t.
NormalForm canonicalize(const Term& t,
                        std::size_t size_cap = Limits{}.word_length_cap);

struct EqualOptions {
  KClassEngine* engine = nullptr;  // reused for cross-checks when given
  bool cross_check = true;
  int check_depth = 4;
  Limits limits{};
};

/// Decides ⟦t1⟧ = ⟦t2⟧ by comparing normal forms. When the answer is "equal"
/// and cross-checking is on, verifies π_k(t1) = π_k(t2) for k ≤ check_depth
/// and throws InconsistencyError on any disagreement — that would be a
/// normal-form bug witnessed by a depth-k sentence, not a property of the
/// inputs.
bool equal(const Term& t1, const Term& t2, const Alphabet& alphabet,
           const EqualOptions& options = {});

struct Separation {
  int depth = 0;
  KClass first;
  KClass second;
};

/// Least k ≤ kmax with π_k(t1) ≠ π_k(t2), if any.
std::optional<Separation> separate(const Term& t1, const Term& t2, int kmax,
                                   KClassEngine& engine);

/// Finite word with every ω-power replaced by an n-th power.
std::string unfold(const Term& t, std::uint64_t n,
                   std::size_t length_cap = Limits{}.word_length_cap);

/// For a canonical nonempty sequence s: the base m of an ω-power whose
/// J-class equals that of ⟦s⟧^ω. Rotation classes of bases share this key,
/// since (uv)^ω and (vu)^ω are J-equivalent.
NfSeq omega_jclass_base(const NfSeq& canonical_base);

}  // namespace aper
