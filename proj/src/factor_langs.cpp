#include "aper/factor_langs.hpp"

#include <algorithm>
#include <memory>

namespace aper {

namespace {

Nfa word_nfa(const std::string& w, const Alphabet& a) {
  return from_words({w}, a);
}

Nfa prefixes_nfa(const std::string& w, const Alphabet& a) {
  // Chain with every state accepting.
  Nfa n{a, static_cast<int>(w.size()) + 1, {}, {0}, {}};
  for (std::size_t i = 0; i < w.size(); ++i) {
    n.transitions.push_back(
        {static_cast<int>(i), a.index(w[i]), static_cast<int>(i) + 1});
  }
  for (int s = 0; s < n.num_states; ++s) n.accepting.push_back(s);
  return n;
}

Nfa factors_nfa(const std::string& w, const Alphabet& a) {
  std::set<std::string> factors{""};
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t len = 1; len + i <= w.size(); ++len)
      factors.insert(w.substr(i, len));
  return from_words(factors, a);
}

struct Recursion {
  const Alphabet& alphabet;
  const Limits& limits;

  Nfa prefix(const Term& t) const {
    if (auto w = is_finite_word(t, limits.word_length_cap))
      return prefixes_nfa(*w, alphabet);
    switch (t.kind()) {
      case TermKind::Concat: {
        const auto& kids = t.children();
        Nfa result = prefix(*kids[0]);
        std::string lead;
        for (std::size_t i = 1; i < kids.size(); ++i) {
          auto w = is_finite_word(*kids[i - 1], limits.word_length_cap);
          if (!w) break;  // nothing after the first infinite child is a prefix
          lead += *w;
          result = union_of(result, concat(word_nfa(lead, alphabet), prefix(*kids[i])));
        }
        return result;
      }
      case TermKind::Omega: {
        if (auto w = is_finite_word(*t.base(), limits.word_length_cap))
          return concat(star(word_nfa(*w, alphabet)), prefix(*t.base()));
        return prefix(*t.base());
      }
      case TermKind::Power:
        // Finite bases were handled above; prefixes stay in the first copy.
        return prefix(*t.base());
      default:
        return empty_language(alphabet);
    }
  }

  Nfa suffix(const Term& t) const {
    Recursion mirrored{alphabet, limits};
    return reverse(mirrored.prefix(*reversed(t)));
  }

  Nfa factor(const Term& t) const {
    if (auto w = is_finite_word(t, limits.word_length_cap))
      return factors_nfa(*w, alphabet);
    switch (t.kind()) {
      case TermKind::Concat: {
        const auto& kids = t.children();
        TermPtr head = kids[0];
        TermPtr rest = Term::concat(
            std::vector<TermPtr>(kids.begin() + 1, kids.end()));
        Nfa spanning = concat(suffix(*head), prefix(*rest));
        return union_of(union_of(factor(*head), factor(*rest)), spanning);
      }
      case TermKind::Omega: {
        const Term& s = *t.base();
        Nfa spanning = [&] {
          if (auto w = is_finite_word(s, limits.word_length_cap))
            return concat(suffix(s),
                          concat(star(word_nfa(*w, alphabet)), prefix(s)));
          return concat(suffix(s), prefix(s));
        }();
        return union_of(factor(s), spanning);
      }
      case TermKind::Power: {
        // Infinite base, exponent ≥ 2: factors sit in one copy or span one
        // boundary.
        const Term& s = *t.base();
        return union_of(factor(s), concat(suffix(s), prefix(s)));
      }
      default:
        return empty_language(alphabet);
    }
  }
};

Dfa finish(const Nfa& n, const Limits& limits) {
  return minimize(determinize(n, limits.dfa_state_cap));
}

}  // namespace

Dfa prefix_lang(const Term& t, const Alphabet& alphabet, const Limits& limits) {
  return finish(Recursion{alphabet, limits}.prefix(t), limits);
}

Dfa suffix_lang(const Term& t, const Alphabet& alphabet, const Limits& limits) {
  return finish(Recursion{alphabet, limits}.suffix(t), limits);
}

Dfa factor_lang(const Term& t, const Alphabet& alphabet, const Limits& limits) {
  return finish(Recursion{alphabet, limits}.factor(t), limits);
}

Dfa substitution_factor_lang(const Term& v, const Alphabet& inner,
                             const std::map<char, TermPtr>& images,
                             const Alphabet& target, FactorKind which,
                             const Limits& limits) {
  std::set<char> finite_letters;
  std::map<char, std::string> finite_words;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    char b = inner.letter(i);
    auto it = images.find(b);
    if (it == images.end())
      throw std::invalid_argument(std::string("no image for letter '") + b + "'");
    if (it->second->kind() == TermKind::Empty)
      throw std::invalid_argument(
          std::string("erasing substitution: letter '") + b +
          "' maps to the empty word");
    if (auto w = is_finite_word(*it->second, limits.word_length_cap)) {
      finite_letters.insert(b);
      finite_words.emplace(b, *w);
    }
  }

  Recursion in_rec{inner, limits};
  Recursion out_rec{target, limits};
  auto through_map = [&](const Nfa& over_inner) {
    return image(restrict_letters(over_inner, finite_letters), finite_words,
                 target);
  };
  Nfa eps = from_words({""}, target);

  switch (which) {
    case FactorKind::kPrefix: {
      Nfa pv = in_rec.prefix(v);
      Nfa result = through_map(pv);  // b = ε summand
      for (std::size_t i = 0; i < inner.size(); ++i) {
        char b = inner.letter(i);
        Nfa part = concat(through_map(right_quotient(pv, b)),
                          out_rec.prefix(*images.at(b)));
        result = union_of(result, part);
      }
      return finish(result, limits);
    }
    case FactorKind::kSuffix: {
      Nfa sv = in_rec.suffix(v);
      Nfa result = through_map(sv);
      for (std::size_t i = 0; i < inner.size(); ++i) {
        char c = inner.letter(i);
        Nfa part = concat(out_rec.suffix(*images.at(c)),
                          through_map(left_quotient(sv, c)));
        result = union_of(result, part);
      }
      return finish(result, limits);
    }
    case FactorKind::kFactor: {
      Nfa fv = in_rec.factor(v);
      Nfa result = empty_language(target);
      for (char b : content(v))
        result = union_of(result, out_rec.factor(*images.at(b)));
      for (std::size_t i = 0; i <= inner.size(); ++i) {
        bool eps1 = i == inner.size();
        Nfa left = eps1 ? eps : out_rec.suffix(*images.at(inner.letter(i)));
        Nfa q1 = eps1 ? fv : left_quotient(fv, inner.letter(i));
        for (std::size_t j = 0; j <= inner.size(); ++j) {
          bool eps2 = j == inner.size();
          Nfa right = eps2 ? eps : out_rec.prefix(*images.at(inner.letter(j)));
          Nfa q2 = eps2 ? q1 : right_quotient(q1, inner.letter(j));
          result = union_of(result, concat(left, concat(through_map(q2), right)));
        }
      }
      return finish(result, limits);
    }
  }
  return finish(empty_language(target), limits);
}

namespace {

void collect_omega_bases(const Term& t, std::vector<TermPtr>& out) {
  switch (t.kind()) {
    case TermKind::Empty:
    case TermKind::Letter:
      return;
    case TermKind::Concat:
      for (const auto& child : t.children()) collect_omega_bases(*child, out);
      return;
    case TermKind::Power:
      collect_omega_bases(*t.base(), out);
      return;
    case TermKind::Omega:
      collect_omega_bases(*t.base(), out);
      out.push_back(t.base());
      return;
  }
}

}  // namespace

std::vector<RegJClass> regular_jclasses(const Term& t, KClassEngine& engine) {
  std::vector<RegJClass> entries;
  entries.push_back({NormalForm{}, false});  // J_ε

  std::vector<TermPtr> bases;
  collect_omega_bases(t, bases);
  for (const auto& base : bases) {
    NfSeq normalized = canonicalize(*base).items();
    if (normalized.empty()) continue;  // ε^ω contributes nothing beyond J_ε
    NfSeq key = omega_jclass_base(normalized);
    NfSeq wrapped;
    wrapped.push_back(NfItem::make_omega(std::move(key)));
    NormalForm form{std::move(wrapped)};
    bool known = false;
    for (const auto& e : entries) known = known || e.form == form;
    if (!known) entries.push_back({std::move(form), false});
  }

  // Distinct entries: try to certify J-incomparability through finite
  // quotients. The quotient is taken over the pair's combined content
  // (erasing the other letters is a homomorphism, so incomparability there
  // is still a valid certificate), which keeps the monoids small. A pair
  // that no affordable π_k (k ≤ 2) separates stays split but flagged.
  struct Cached {
    std::unique_ptr<KClassEngine> engine;
    std::optional<QuotientMonoid> quotient[3];
    std::unique_ptr<GreenRelations> green[3];
    bool too_big[3] = {false, false, false};
  };
  std::map<std::string, Cached> cache;
  Limits budget = engine.limits();
  budget.monoid_cap = std::min<std::size_t>(budget.monoid_cap, 2000);

  auto separated = [&](const NormalForm& a, const NormalForm& b) {
    std::set<char> joint = content(*a.to_term());
    for (char c : content(*b.to_term())) joint.insert(c);
    if (joint.empty()) return false;
    std::string letters;
    for (std::size_t i = 0; i < engine.alphabet().size(); ++i)
      if (joint.count(engine.alphabet().letter(i)))
        letters.push_back(engine.alphabet().letter(i));
    Cached& slot = cache[letters];
    if (!slot.engine)
      slot.engine = std::make_unique<KClassEngine>(Alphabet(letters), budget);
    for (int k = 1; k <= 2; ++k) {
      if (slot.too_big[k]) break;
      if (!slot.quotient[k]) {
        try {
          slot.quotient[k] = slot.engine->quotient_monoid(k);
          slot.green[k] =
              std::make_unique<GreenRelations>(slot.quotient[k]->monoid);
        } catch (const LimitError&) {
          slot.too_big[k] = true;
          break;
        }
      }
      const QuotientMonoid& q = *slot.quotient[k];
      std::map<char, int> h(q.letter_to_element.begin(),
                            q.letter_to_element.end());
      int ea = evaluate(*a.to_term(), q.monoid, h);
      int eb = evaluate(*b.to_term(), q.monoid, h);
      if (!slot.green[k]->j_equiv(ea, eb)) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (!separated(entries[i].form, entries[j].form)) {
        entries[i].unverified = true;
        entries[j].unverified = true;
      }
  return entries;
}

FactorReport factor_report(const TermPtr& t, KClassEngine& engine,
                           const Limits& limits) {
  return FactorReport{t, prefix_lang(*t, engine.alphabet(), limits),
                      suffix_lang(*t, engine.alphabet(), limits),
                      factor_lang(*t, engine.alphabet(), limits),
                      regular_jclasses(*t, engine)};
}

}  // namespace aper
