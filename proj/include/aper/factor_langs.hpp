#pragma once

#include <map>
#include <vector>

#include "aper/automata.hpp"
#include "aper/kclass.hpp"
#include "aper/limits.hpp"
#include "aper/normal_form.hpp"
#include "aper/term.hpp"

namespace aper {

/// Minimal DFA of P(t), the finite prefixes of ⟦t⟧, by structural recursion:
///   P(finite w) = prefixes of w
///   P(t1·t2)    = P(t1) ∪ w1·P(t2) when t1 is the finite word w1, else P(t1)
///   P(s^ω)      = w*·P(s) when s is the finite word w, else P(s)
Dfa prefix_lang(const Term& t, const Alphabet& alphabet,
                const Limits& limits = {});

/// Mirror image of prefix_lang on the letter-reversed term.
Dfa suffix_lang(const Term& t, const Alphabet& alphabet,
                const Limits& limits = {});

/// Minimal DFA of F(t), the finite factors of ⟦t⟧:
///   F(finite w) = factors of w
///   F(t1·t2)    = F(t1) ∪ F(t2) ∪ S(t1)·P(t2)
///   F(s^ω)      = F(s) ∪ S(s)·w*·P(s) when s is the finite word w,
///                 else F(s) ∪ S(s)·P(s)
/// A finite factor never contains a full copy of an infinite s.
Dfa factor_lang(const Term& t, const Alphabet& alphabet,
                const Limits& limits = {});

enum class FactorKind { kPrefix, kSuffix, kFactor };

/// The prefix/suffix/factor language of substitute(v, images) computed
/// through the substitution formulas, e.g.
///   P(f(v)) = ⋃_{b ∈ B∪{ε}} f(C* ∩ P(v)b⁻¹) · P(f(b))
/// with C the letters whose images are finite words. The map must be
/// non-erasing. Language-equal to the direct recursion on the substituted
/// term.
Dfa substitution_factor_lang(const Term& v, const Alphabet& inner,
                             const std::map<char, TermPtr>& images,
                             const Alphabet& target, FactorKind which,
                             const Limits& limits = {});

struct RegJClass {
  NormalForm form;          // canonical idempotent representative
  bool unverified = false;  // a merge-or-not decision lacked a π_k witness
};

/// Regular J-classes above ⟦t⟧:
///   Reg(finite) = {J_ε},  Reg(t1·t2) = Reg(t1) ∪ Reg(t2),
///   Reg(s^ω) = Reg(s) ∪ {J of s^ω}.
/// Entries are deduplicated by the rotation-least primitive root of the
/// ω-base, which represents the J-class of the idempotent exactly; remaining
/// pairs are kept separate, verified J-incomparable through π_k (k ≤ 2)
/// where possible and flagged unverified otherwise.
std::vector<RegJClass> regular_jclasses(const Term& t, KClassEngine& engine);

struct FactorReport {
  TermPtr term;
  Dfa prefix_dfa;
  Dfa suffix_dfa;
  Dfa factor_dfa;
  std::vector<RegJClass> reg_jclasses;
};

FactorReport factor_report(const TermPtr& t, KClassEngine& engine,
                           const Limits& limits = {});

}  // namespace aper
