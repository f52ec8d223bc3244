#include "aper/kclass.hpp"

#include <algorithm>

namespace aper {

KClassEngine::KClassEngine(Alphabet alphabet, Limits limits)
    : alphabet_(std::move(alphabet)), limits_(limits) {
  ensure_depth(0);
}

void KClassEngine::ensure_depth(int depth) {
  if (depth < 0) throw std::invalid_argument("negative depth");
  if (depth > 62) throw LimitError("depth " + std::to_string(depth) + " is out of range");
  if (static_cast<std::size_t>(depth) < classes_.size()) return;
  classes_.resize(depth + 1);
  interned_.resize(depth + 1);
  mul_memo_.resize(depth + 1);
  if (classes_[0].empty()) {
    classes_[0].push_back({{}, ""});
    interned_[0].emplace(std::vector<Triple>{}, 0);
  }
}

void KClassEngine::check_word(std::string_view word) const {
  for (char c : word)
    if (!alphabet_.contains(c))
      throw std::invalid_argument(std::string("letter '") + c +
                                  "' not in alphabet '" + alphabet_.letters() +
                                  "'");
}

bool KClassEngine::word_less(std::string_view a, std::string_view b) const {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return alphabet_.index(a[i]) < alphabet_.index(b[i]);
  return a.size() < b.size();
}

KClass KClassEngine::intern(int depth, std::vector<Triple> triples,
                            std::string_view word) {
  auto& table = interned_[depth];
  auto it = table.find(triples);
  if (it != table.end()) {
    std::string& rep = classes_[depth][it->second].rep;
    if (word.size() < rep.size() ||
        (word.size() == rep.size() && word_less(word, rep)))
      rep.assign(word);
    return {depth, it->second};
  }
  if (classes_[depth].size() >= limits_.class_cap)
    throw LimitError("class table at depth " + std::to_string(depth) +
                     " exceeds the cap of " + std::to_string(limits_.class_cap) +
                     " interned classes");
  auto id = static_cast<std::uint32_t>(classes_[depth].size());
  classes_[depth].push_back({triples, std::string(word)});
  table.emplace(std::move(triples), id);
  return {depth, id};
}

KClass KClassEngine::classify(std::string_view word, int depth) {
  check_word(word);
  ensure_depth(depth);
  if (depth == 0) return {0, 0};

  const std::size_t n = word.size();
  // Ray classes at depth-1, one linear pass each way; sound because ≡_{k-1}
  // is a congruence.
  std::vector<KClass> prefix(n + 1), suffix(n + 1);
  prefix[0] = empty_class(depth - 1);
  for (std::size_t i = 0; i < n; ++i)
    prefix[i + 1] = mul(prefix[i], letter_class(word[i], depth - 1));
  suffix[n] = empty_class(depth - 1);
  for (std::size_t i = n; i-- > 0;)
    suffix[i] = mul(letter_class(word[i], depth - 1), suffix[i + 1]);

  std::vector<Triple> triples;
  triples.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    triples.push_back({prefix[i].id, suffix[i + 1].id, word[i]});
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  return intern(depth, std::move(triples), word);
}

KClass KClassEngine::letter_class(char c, int depth) {
  return classify(std::string_view(&c, 1), depth);
}

KClass KClassEngine::mul(KClass x, KClass y) {
  if (x.depth != y.depth)
    throw std::invalid_argument("mul of classes at different depths");
  if (x.depth == 0) return x;
  // ε is the identity; at depth ≥ 1 it is exactly the class with no triples.
  if (classes_[x.depth][x.id].triples.empty()) return y;
  if (classes_[y.depth][y.id].triples.empty()) return x;
  auto& memo = mul_memo_[x.depth];
  std::uint64_t key = (static_cast<std::uint64_t>(x.id) << 32) | y.id;
  auto it = memo.find(key);
  if (it != memo.end()) return {x.depth, it->second};
  std::string product = classes_[x.depth][x.id].rep + classes_[y.depth][y.id].rep;
  KClass result = classify(product, x.depth);
  memo.emplace(key, result.id);
  return result;
}

KClass KClassEngine::power(KClass x, std::uint64_t n) {
  KClass result = empty_class(x.depth);
  KClass base = x;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

KClass KClassEngine::omega(KClass x) {
  std::uint64_t exponent =
      x.depth == 0 ? 1 : (std::uint64_t{1} << x.depth) - 1;
  return power(x, exponent);
}

KClass KClassEngine::project(const Term& t, int depth) {
  ensure_depth(depth);
  switch (t.kind()) {
    case TermKind::Empty:
      return empty_class(depth);
    case TermKind::Letter:
      return letter_class(t.letter(), depth);
    case TermKind::Concat: {
      KClass acc = empty_class(depth);
      for (const auto& child : t.children())
        acc = mul(acc, project(*child, depth));
      return acc;
    }
    case TermKind::Power:
      return power(project(*t.base(), depth), t.exponent());
    case TermKind::Omega:
      return omega(project(*t.base(), depth));
  }
  return empty_class(depth);
}

const std::string& KClassEngine::representative(KClass c) const {
  return classes_[c.depth][c.id].rep;
}

std::size_t KClassEngine::num_classes(int depth) const {
  return static_cast<std::size_t>(depth) < classes_.size()
             ? classes_[depth].size()
             : 0;
}

QuotientMonoid KClassEngine::quotient_monoid(int depth) {
  ensure_depth(depth);
  std::vector<KClass> elements;
  std::unordered_map<std::uint32_t, int> index_of;
  auto add = [&](KClass c) {
    auto it = index_of.find(c.id);
    if (it != index_of.end()) return it->second;
    if (elements.size() >= limits_.monoid_cap)
      throw LimitError("quotient monoid exceeds the element cap of " +
                       std::to_string(limits_.monoid_cap) + " (found " +
                       std::to_string(elements.size()) + " classes so far)");
    int idx = static_cast<int>(elements.size());
    index_of.emplace(c.id, idx);
    elements.push_back(c);
    return idx;
  };

  add(empty_class(depth));
  std::vector<KClass> generators;
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    KClass g = letter_class(alphabet_.letter(i), depth);
    generators.push_back(g);
    add(g);
  }
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const KClass& g : generators) add(mul(elements[i], g));

  // The explicit table is quadratic; refuse sizes that would thrash.
  if (elements.size() * elements.size() > 100'000'000)
    throw LimitError("quotient monoid has " + std::to_string(elements.size()) +
                     " classes; its full multiplication table exceeds desk "
                     "scale (lower the depth or shrink the alphabet)");

  const int size = static_cast<int>(elements.size());
  std::vector<int> table(static_cast<std::size_t>(size) * size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      KClass p = mul(elements[i], elements[j]);
      table[static_cast<std::size_t>(i) * size + j] = index_of.at(p.id);
    }
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (const KClass& c : elements) {
    const std::string& rep = representative(c);
    labels.push_back(rep.empty() ? "1" : rep);
  }
  QuotientMonoid result{
      make_monoid(size, std::move(table), 0, std::move(labels), 200, nullptr),
      {},
      elements};
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    result.letter_to_element[alphabet_.letter(i)] =
        index_of.at(generators[i].id);
  return result;
}

bool KClassEngine::ef_game_oracle(std::string_view u, std::string_view v,
                                  int depth) {
  check_word(u);
  check_word(v);
  if (depth < 0) throw std::invalid_argument("negative depth");
  if (u.size() > limits_.oracle_length_cap || v.size() > limits_.oracle_length_cap)
    throw LimitError("EF oracle words exceed the length bound of " +
                     std::to_string(limits_.oracle_length_cap));
  return ef_rec(std::string(u), std::string(v), depth);
}

bool KClassEngine::ef_rec(const std::string& u, const std::string& v, int depth) {
  if (depth == 0) return true;
  if (u == v) return true;  // copy strategy
  const std::string& a = std::min(u, v);
  const std::string& b = std::max(u, v);
  std::string key = a + '\x01' + b + '\x01' + std::to_string(depth);
  auto it = oracle_memo_.find(key);
  if (it != oracle_memo_.end()) return it->second;

  auto responds = [&](const std::string& s, const std::string& t) {
    // Every ∀-move in s has an ∃-answer in t.
    for (std::size_t i = 0; i < s.size(); ++i) {
      bool answered = false;
      for (std::size_t j = 0; j < t.size() && !answered; ++j) {
        answered = s[i] == t[j] &&
                   ef_rec(s.substr(0, i), t.substr(0, j), depth - 1) &&
                   ef_rec(s.substr(i + 1), t.substr(j + 1), depth - 1);
      }
      if (!answered) return false;
    }
    return true;
  };
  bool result = responds(u, v) && responds(v, u);
  oracle_memo_.emplace(std::move(key), result);
  return result;
}

}  // namespace aper
