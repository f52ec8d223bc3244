#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "aper/errors.hpp"
#include "aper/term.hpp"

namespace aper {

/// Finite monoid given by its full multiplication table.
struct FiniteMonoid {
  int size = 0;
  std::vector<int> table;  // row-major: table[a*size + b] = a·b
  int identity = 0;
  std::vector<std::string> labels;  // empty, or one name per element

  int mul(int a, int b) const { return table[a * size + b]; }
  int pow(int x, std::uint64_t n) const;
};

/// Validates ranges and the identity law; checks associativity exhaustively
/// for size ≤ assoc_check_bound, otherwise trusts it and writes one warning
/// line to *warnings.
FiniteMonoid make_monoid(int size, std::vector<int> table, int identity,
                         std::vector<std::string> labels = {},
                         int assoc_check_bound = 200,
                         std::ostream* warnings = nullptr);

/// Line-oriented monoid file format:
///   monoid <n>
///   identity <i>
///   row <i>: j0 j1 ... j(n-1)
///   label <i> <name>          (optional)
FiniteMonoid read_monoid(std::istream& in, int assoc_check_bound = 200,
                         std::ostream* warnings = nullptr);
std::string write_monoid(const FiniteMonoid& m);

/// True iff x^n = x^{n+1} for every x, with n = |M|; equivalently M has no
/// nontrivial subgroup.
bool is_aperiodic(const FiniteMonoid& m);

/// The unique idempotent in {x, x^2, ...}.
int omega_power(const FiniteMonoid& m, int x);

/// Green's quasi-orders and equivalence classes. u ≤_J v means u = xvy for
/// some x, y (v is a factor of u); ≤_R and ≤_L are the prefix and suffix
/// orders.
class GreenRelations {
 public:
  explicit GreenRelations(const FiniteMonoid& m);

  bool j_le(int u, int v) const { return test(j_below_, u, v); }
  bool r_le(int u, int v) const { return test(r_below_, u, v); }
  bool l_le(int u, int v) const { return test(l_below_, u, v); }
  bool j_equiv(int u, int v) const { return j_le(u, v) && j_le(v, u); }

  int j_class(int x) const { return j_class_[x]; }
  int l_class(int x) const { return l_class_[x]; }
  int r_class(int x) const { return r_class_[x]; }
  int h_class(int x) const { return h_class_[x]; }
  int num_j_classes() const { return num_j_; }
  const std::vector<int>& idempotents() const { return idempotents_; }

 private:
  bool test(const std::vector<std::uint64_t>& rel, int u, int v) const {
    return (rel[static_cast<std::size_t>(v) * words_ + u / 64] >>
            (u % 64)) & 1;
  }

  int size_;
  std::size_t words_;
  // rel[v] is the bitset of elements below v.
  std::vector<std::uint64_t> j_below_, l_below_, r_below_;
  std::vector<int> j_class_, l_class_, r_class_, h_class_;
  std::vector<int> idempotents_;
  int num_j_ = 0;
};

/// Interprets an ω-term in M: letters through h, concatenation through the
/// table, ω-power as the idempotent power. Well-defined in any finite monoid;
/// callers wanting the pro-aperiodic semantics should check is_aperiodic.
int evaluate(const Term& t, const FiniteMonoid& m, const std::map<char, int>& h);

}  // namespace aper
