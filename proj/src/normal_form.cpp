#include "aper/normal_form.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace aper {

NfItem NfItem::make_letter(char c) { return NfItem{false, c, 0, {}}; }

NfItem NfItem::make_omega(NfSeq base) {
  NfItem item{true, 0, 0, std::move(base)};
  item.rank = 1 + rank_of(item.base);
  return item;
}

int rank_of(const NfSeq& seq) {
  int r = 0;
  for (const auto& item : seq) r = std::max(r, item.rank);
  return r;
}

int compare(const NfItem& a, const NfItem& b) {
  if (a.rank != b.rank) return a.rank < b.rank ? -1 : 1;
  if (a.is_omega != b.is_omega) return a.is_omega ? 1 : -1;
  if (!a.is_omega) {
    if (a.letter != b.letter) return a.letter < b.letter ? -1 : 1;
    return 0;
  }
  return compare(a.base, b.base);
}

int compare(const NfSeq& a, const NfSeq& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

bool operator==(const NfItem& a, const NfItem& b) { return compare(a, b) == 0; }

TermPtr NormalForm::to_term() const {
  struct Build {
    static TermPtr seq(const NfSeq& items) {
      std::vector<TermPtr> parts;
      parts.reserve(items.size());
      for (const auto& item : items) {
        if (item.is_omega)
          parts.push_back(Term::omega(seq(item.base)));
        else
          parts.push_back(Term::letter(item.letter));
      }
      return Term::concat(std::move(parts));
    }
  };
  return Build::seq(items_);
}

namespace {

// R2 and R3 only, applied largest-removal-first. Overlapping redexes are not
// confluent in general: a one-item absorption can destroy a larger base copy
// it overlaps, so bigger removals win, ties going to the leftmost.
void assemble_basic(NfSeq& items) {
  for (;;) {
    std::size_t best_begin = 0, best_count = 0;
    auto offer = [&](std::size_t begin, std::size_t count) {
      if (count > best_count) {
        best_begin = begin;
        best_count = count;
      }
    };
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (!items[i].is_omega) continue;
      const NfSeq& base = items[i].base;
      const std::size_t m = base.size();
      if (i + 1 < items.size() && items[i + 1].is_omega &&
          compare(base, items[i + 1].base) == 0)
        offer(i + 1, 1);  // R2
      if (i >= m && std::equal(base.begin(), base.end(), items.begin() + (i - m)))
        offer(i - m, m);  // R3 left
      if (i + m < items.size() &&
          std::equal(base.begin(), base.end(), items.begin() + i + 1))
        offer(i + 1, m);  // R3 right
    }
    if (best_count == 0) return;
    items.erase(items.begin() + best_begin,
                items.begin() + best_begin + best_count);
  }
}

// Between A^ω and B^ω with finite-word bases, a middle w is equivalent to w'
// exactly when copies of A and B can be shifted across: A^i w B^j =
// A^i' w' B^j'. BFS over prefix-strips of A, suffix-strips of B and bounded
// re-growth finds the least (shortest, then lex) representative; every move
// preserves the element, so replacing by the minimum is always sound.
std::string minimal_middle(const std::string& w, const std::string& left_base,
                           const std::string& right_base) {
  const std::size_t bound = w.size() + left_base.size() + right_base.size();
  std::set<std::string> seen{w};
  std::vector<std::string> queue{w};
  std::string best = w;
  auto better = [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  };
  auto offer = [&](std::string s) {
    if (s.size() > bound || !seen.insert(s).second) return;
    queue.push_back(std::move(s));
  };
  for (std::size_t at = 0; at < queue.size() && queue.size() < 4096; ++at) {
    std::string cur = queue[at];
    if (better(cur, best)) best = cur;
    if (cur.compare(0, left_base.size(), left_base) == 0)
      offer(cur.substr(left_base.size()));
    if (cur.size() >= right_base.size() &&
        cur.compare(cur.size() - right_base.size(), right_base.size(),
                    right_base) == 0)
      offer(cur.substr(0, cur.size() - right_base.size()));
    offer(left_base + cur);
    offer(cur + right_base);
  }
  return best;
}

bool all_letters(const NfSeq& s) {
  for (const auto& item : s)
    if (item.is_omega) return false;
  return true;
}

std::string letters_of(const NfSeq& s, std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) out.push_back(s[i].letter);
  return out;
}

// Full normalization of a sequence. On top of R2/R3:
//   - edge absorption: a run x directly before Ω(B) disappears whenever x·B
//     normalizes back to B (then x·B^ω = x·B·B^ω = B^ω), dually on the right;
//     this catches e.g. x^ω sitting against (x^ω c)^ω.
//   - middle minimization between ω-powers of finite words, so that e.g.
//     (ab)^ω a b^ω and (ab)^ω b^ω meet in one form.
void assemble(NfSeq& items) {
  for (;;) {
    assemble_basic(items);
    bool changed = false;
    for (std::size_t i = 0; i < items.size() && !changed; ++i) {
      if (!items[i].is_omega) continue;
      const NfSeq& base = items[i].base;
      for (std::size_t len = 1; len <= i && !changed; ++len) {
        NfSeq scratch(items.begin() + (i - len), items.begin() + i);
        scratch.insert(scratch.end(), base.begin(), base.end());
        assemble_basic(scratch);
        if (compare(scratch, base) == 0) {
          items.erase(items.begin() + (i - len), items.begin() + i);
          changed = true;
        }
      }
      for (std::size_t len = 1; i + len < items.size() && !changed; ++len) {
        NfSeq scratch = base;
        scratch.insert(scratch.end(), items.begin() + i + 1,
                       items.begin() + i + 1 + len);
        assemble_basic(scratch);
        if (compare(scratch, base) == 0) {
          items.erase(items.begin() + i + 1, items.begin() + i + 1 + len);
          changed = true;
        }
      }
    }
    if (changed) continue;
    for (std::size_t i = 0; i + 1 < items.size() && !changed; ++i) {
      if (!items[i].is_omega || !all_letters(items[i].base)) continue;
      std::size_t j = i + 1;
      while (j < items.size() && !items[j].is_omega) ++j;
      if (j >= items.size() || !all_letters(items[j].base)) continue;
      std::string middle = letters_of(items, i + 1, j);
      std::string least = minimal_middle(middle, letters_of(items[i].base, 0,
                                                            items[i].base.size()),
                                         letters_of(items[j].base, 0,
                                                    items[j].base.size()));
      if (least.size() < middle.size() ||
          (least.size() == middle.size() && least < middle)) {
        NfSeq fresh;
        for (char c : least) fresh.push_back(NfItem::make_letter(c));
        items.erase(items.begin() + i + 1, items.begin() + j);
        items.insert(items.begin() + i + 1, fresh.begin(), fresh.end());
        changed = true;
      }
    }
    if (!changed) return;
  }
}

// Smallest-period check (failure function over items).
NfSeq primitive_root(const NfSeq& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t j = fail[i - 1];
    while (j > 0 && !(s[i] == s[j])) j = fail[j - 1];
    if (s[i] == s[j]) ++j;
    fail[i] = j;
  }
  std::size_t period = n - fail[n - 1];
  if (period < n && n % period == 0)
    return NfSeq(s.begin(), s.begin() + period);
  return s;
}

bool rotation_less(const NfSeq& r, std::size_t a, std::size_t b) {
  const std::size_t m = r.size();
  for (std::size_t i = 0; i < m; ++i) {
    int c = compare(r[(a + i) % m], r[(b + i) % m]);
    if (c != 0) return c < 0;
  }
  return false;
}

// x^ω = x for idempotent x; detected by x·x assembling back to x. This is
// R1 in the form that survives normalization: the base of an (x^ω)^ω is no
// longer literally an ω-power once rotated, but it is idempotent.
bool is_idempotent(const NfSeq& s) {
  NfSeq doubled = s;
  doubled.insert(doubled.end(), s.begin(), s.end());
  assemble(doubled);
  return compare(doubled, s) == 0;
}

std::size_t least_rotation_index(const NfSeq& root) {
  std::size_t best = 0;
  for (std::size_t cand = 1; cand < root.size(); ++cand)
    if (rotation_less(root, cand, best)) best = cand;
  return best;
}

// Ω of a canonical base: R1 (idempotent collapse), R4 (primitive root),
// R5 (rotate to the least base through (xy)^ω x = x(yx)^ω). In ω-context
// the base is cyclic, so a rotation can expose an absorption invisible in
// the straight-line form — e.g. a·b·a·(ab)^ω rotates to a·(ab)^ω·a·b whose
// tail ab is swallowed by the (ab)^ω. Any rotation that assembles strictly
// smaller replaces the base, and the construction recurses.
NfSeq omega_of(NfSeq base) {
  assemble(base);
  if (base.empty()) return {};
  if (is_idempotent(base)) return base;
  NfSeq root = primitive_root(base);
  if (is_idempotent(root)) return root;

  for (std::size_t j = 0; j < root.size(); ++j) {
    NfSeq rotated(root.begin() + j, root.end());
    rotated.insert(rotated.end(), root.begin(), root.begin() + j);
    NfSeq reduced = rotated;
    assemble(reduced);
    if (compare(reduced, rotated) != 0) {
      NfSeq inner = omega_of(std::move(reduced));
      NfSeq out(root.begin(), root.begin() + j);
      out.insert(out.end(), std::make_move_iterator(inner.begin()),
                 std::make_move_iterator(inner.end()));
      out.insert(out.end(), root.begin() + j, root.end());
      assemble(out);
      return out;
    }
  }

  std::size_t j = least_rotation_index(root);
  NfSeq rotated(root.begin() + j, root.end());
  rotated.insert(rotated.end(), root.begin(), root.begin() + j);
  NfSeq out(root.begin(), root.begin() + j);
  out.push_back(NfItem::make_omega(std::move(rotated)));
  out.insert(out.end(), root.begin() + j, root.end());
  assemble(out);
  return out;
}

struct Normalizer {
  std::size_t cap;

  void check(std::size_t n) const {
    if (n > cap)
      throw LimitError("normal form exceeds the size cap of " +
                       std::to_string(cap) + " items");
  }

  NfSeq norm(const Term& t) const {
    switch (t.kind()) {
      case TermKind::Empty:
        return {};
      case TermKind::Letter:
        return {NfItem::make_letter(t.letter())};
      case TermKind::Concat: {
        NfSeq out;
        for (const auto& child : t.children()) {
          NfSeq part = norm(*child);
          check(out.size() + part.size());
          out.insert(out.end(), std::make_move_iterator(part.begin()),
                     std::make_move_iterator(part.end()));
        }
        assemble(out);
        return out;
      }
      case TermKind::Power: {
        NfSeq unit = norm(*t.base());
        if (!unit.empty() && t.exponent() > cap / unit.size())
          throw LimitError("normal form exceeds the size cap of " +
                           std::to_string(cap) + " items");
        NfSeq out;
        out.reserve(unit.size() * t.exponent());
        for (std::uint64_t i = 0; i < t.exponent(); ++i)
          out.insert(out.end(), unit.begin(), unit.end());
        assemble(out);
        return out;
      }
      case TermKind::Omega: {
        NfSeq out = omega_of(norm(*t.base()));
        assemble(out);
        return out;
      }
    }
    return {};
  }
};

}  // namespace

NormalForm canonicalize(const Term& t, std::size_t size_cap) {
  return NormalForm(Normalizer{size_cap}.norm(t));
}

NfSeq omega_jclass_base(const NfSeq& canonical_base) {
  const NfSeq& s = canonical_base;
  if (is_idempotent(s)) {
    // Rotation form p·Ω(m)·q; the unique maximal-rank item is that Ω, and
    // ⟦s⟧^ω = ⟦s⟧ is J-equivalent to m^ω.
    const NfItem* top = &s[0];
    for (const auto& item : s)
      if (item.rank > top->rank) top = &item;
    if (top->is_omega) return top->base;
  }
  NfSeq root = primitive_root(s);
  for (std::size_t j = 0; j < root.size(); ++j) {
    NfSeq rotated(root.begin() + j, root.end());
    rotated.insert(rotated.end(), root.begin(), root.begin() + j);
    NfSeq reduced = rotated;
    assemble(reduced);
    if (compare(reduced, rotated) != 0) return omega_jclass_base(reduced);
  }
  std::size_t j = least_rotation_index(root);
  NfSeq out(root.begin() + j, root.end());
  out.insert(out.end(), root.begin(), root.begin() + j);
  return out;
}

bool equal(const Term& t1, const Term& t2, const Alphabet& alphabet,
           const EqualOptions& options) {
  NormalForm nf1 = canonicalize(t1, options.limits.word_length_cap);
  NormalForm nf2 = canonicalize(t2, options.limits.word_length_cap);
  bool same = nf1 == nf2;
  if (same && options.cross_check) {
    std::optional<KClassEngine> local;
    KClassEngine* engine = options.engine;
    if (!engine) {
      local.emplace(alphabet, options.limits);
      engine = &*local;
    }
    for (int k = 0; k <= options.check_depth; ++k) {
      if (engine->project(t1, k) != engine->project(t2, k))
        throw InconsistencyError(
            "normal forms of '" + print(t1) + "' and '" + print(t2) +
            "' coincide but a depth-" + std::to_string(k) +
            " sentence separates them; this is a canonicalizer bug");
    }
  }
  return same;
}

std::optional<Separation> separate(const Term& t1, const Term& t2, int kmax,
                                   KClassEngine& engine) {
  for (int k = 0; k <= kmax; ++k) {
    KClass c1 = engine.project(t1, k);
    KClass c2 = engine.project(t2, k);
    if (c1 != c2) return Separation{k, c1, c2};
  }
  return std::nullopt;
}

namespace {

std::uint64_t unfold_length(const Term& t, std::uint64_t n, std::size_t cap) {
  switch (t.kind()) {
    case TermKind::Empty:
      return 0;
    case TermKind::Letter:
      return 1;
    case TermKind::Concat: {
      std::uint64_t total = 0;
      for (const auto& child : t.children()) {
        total += unfold_length(*child, n, cap);
        if (total > cap)
          throw LimitError("unfolding exceeds the word-length cap of " +
                           std::to_string(cap));
      }
      return total;
    }
    case TermKind::Power:
    case TermKind::Omega: {
      std::uint64_t reps = t.kind() == TermKind::Power ? t.exponent() : n;
      std::uint64_t len = unfold_length(*t.base(), n, cap);
      if (len != 0 && reps > cap / len)
        throw LimitError("unfolding exceeds the word-length cap of " +
                         std::to_string(cap));
      return len * reps;
    }
  }
  return 0;
}

void unfold_into(const Term& t, std::uint64_t n, std::string& out) {
  switch (t.kind()) {
    case TermKind::Empty:
      return;
    case TermKind::Letter:
      out.push_back(t.letter());
      return;
    case TermKind::Concat:
      for (const auto& child : t.children()) unfold_into(*child, n, out);
      return;
    case TermKind::Power:
    case TermKind::Omega: {
      std::uint64_t reps = t.kind() == TermKind::Power ? t.exponent() : n;
      std::string unit;
      unfold_into(*t.base(), n, unit);
      for (std::uint64_t i = 0; i < reps; ++i) out += unit;
      return;
    }
  }
}

}  // namespace

std::string unfold(const Term& t, std::uint64_t n, std::size_t length_cap) {
  if (n == 0) throw std::invalid_argument("unfold exponent must be at least 1");
  std::uint64_t len = unfold_length(t, n, length_cap);
  std::string out;
  out.reserve(static_cast<std::size_t>(len));
  unfold_into(t, n, out);
  return out;
}

}  // namespace aper
