#include "aper/monoid.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace aper {

int FiniteMonoid::pow(int x, std::uint64_t n) const {
  int result = identity;
  int base = x;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

FiniteMonoid make_monoid(int size, std::vector<int> table, int identity,
                         std::vector<std::string> labels,
                         int assoc_check_bound, std::ostream* warnings) {
  if (size <= 0) throw ParseError("monoid must have at least one element", 0);
  if (table.size() != static_cast<std::size_t>(size) * size)
    throw ParseError("multiplication table has wrong shape", 0);
  for (int v : table)
    if (v < 0 || v >= size)
      throw ParseError("table entry out of range", 0);
  if (identity < 0 || identity >= size)
    throw ParseError("identity index out of range", 0);
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(size))
    throw ParseError("label list has wrong length", 0);

  FiniteMonoid m{size, std::move(table), identity, std::move(labels)};
  for (int x = 0; x < size; ++x)
    if (m.mul(m.identity, x) != x || m.mul(x, m.identity) != x)
      throw ParseError("identity law fails at element " + std::to_string(x), 0);
  if (size <= assoc_check_bound) {
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b)
        for (int c = 0; c < size; ++c)
          if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c)))
            throw ParseError("multiplication table is not associative at (" +
                                 std::to_string(a) + "," + std::to_string(b) +
                                 "," + std::to_string(c) + ")",
                             0);
  } else if (warnings) {
    *warnings << "warning: monoid of size " << size
              << " exceeds the associativity check bound of "
              << assoc_check_bound << "; associativity trusted\n";
  }
  return m;
}

FiniteMonoid read_monoid(std::istream& in, int assoc_check_bound,
                         std::ostream* warnings) {
  int size = -1, identity = -1;
  std::vector<int> table;
  std::vector<std::string> labels;
  std::vector<bool> row_seen;
  bool any_label = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    if (keyword == "monoid") {
      if (!(ls >> size) || size <= 0)
        throw ParseError("bad monoid size", lineno);
      table.assign(static_cast<std::size_t>(size) * size, 0);
      labels.assign(size, "");
      row_seen.assign(size, false);
    } else if (keyword == "identity") {
      if (!(ls >> identity)) throw ParseError("bad identity line", lineno);
    } else if (keyword == "row") {
      if (size < 0) throw ParseError("row before monoid header", lineno);
      int i;
      char colon;
      if (!(ls >> i >> colon) || colon != ':' || i < 0 || i >= size)
        throw ParseError("bad row header", lineno);
      for (int j = 0; j < size; ++j) {
        int v;
        if (!(ls >> v)) throw ParseError("row too short", lineno);
        table[static_cast<std::size_t>(i) * size + j] = v;
      }
      row_seen[i] = true;
    } else if (keyword == "label") {
      if (size < 0) throw ParseError("label before monoid header", lineno);
      int i;
      std::string name;
      if (!(ls >> i >> name) || i < 0 || i >= size)
        throw ParseError("bad label line", lineno);
      labels[i] = name;
      any_label = true;
    } else if (keyword[0] == '#') {
      continue;
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", lineno);
    }
  }
  if (size < 0) throw ParseError("missing monoid header", lineno);
  if (identity < 0) throw ParseError("missing identity line", lineno);
  for (int i = 0; i < size; ++i)
    if (!row_seen[i])
      throw ParseError("missing row " + std::to_string(i), lineno);
  if (!any_label) labels.clear();
  return make_monoid(size, std::move(table), identity, std::move(labels),
                     assoc_check_bound, warnings);
}

std::string write_monoid(const FiniteMonoid& m) {
  std::ostringstream out;
  out << "monoid " << m.size << "\n";
  out << "identity " << m.identity << "\n";
  for (int i = 0; i < m.size; ++i) {
    out << "row " << i << ":";
    for (int j = 0; j < m.size; ++j) out << ' ' << m.mul(i, j);
    out << "\n";
  }
  for (std::size_t i = 0; i < m.labels.size(); ++i)
    if (!m.labels[i].empty())
      out << "label " << i << ' ' << m.labels[i] << "\n";
  return out.str();
}

bool is_aperiodic(const FiniteMonoid& m) {
  auto n = static_cast<std::uint64_t>(m.size);
  for (int x = 0; x < m.size; ++x) {
    int stable = m.pow(x, n);
    if (m.mul(stable, x) != stable) return false;
  }
  return true;
}

int omega_power(const FiniteMonoid& m, int x) {
  // Walk x, x^2, ... to find tail length t and cycle length c; the unique
  // idempotent power is x^e with e the smallest multiple of c that is ≥ t.
  std::unordered_map<int, std::uint64_t> first_seen;
  int cur = x;
  std::uint64_t step = 1;
  while (true) {
    auto it = first_seen.find(cur);
    if (it != first_seen.end()) {
      std::uint64_t tail = it->second;
      std::uint64_t cycle = step - tail;
      std::uint64_t e = ((tail + cycle - 1) / cycle) * cycle;
      return m.pow(x, e);
    }
    first_seen.emplace(cur, step);
    cur = m.mul(cur, x);
    ++step;
  }
}

GreenRelations::GreenRelations(const FiniteMonoid& m)
    : size_(m.size), words_(static_cast<std::size_t>((m.size + 63) / 64)) {
  const int n = size_;
  auto set = [&](std::vector<std::uint64_t>& rel, int u, int v) {
    rel[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ull << (u % 64);
  };
  r_below_.assign(words_ * n, 0);
  l_below_.assign(words_ * n, 0);
  j_below_.assign(words_ * n, 0);
  for (int v = 0; v < n; ++v)
    for (int y = 0; y < n; ++y) set(r_below_, m.mul(v, y), v);
  for (int v = 0; v < n; ++v)
    for (int x = 0; x < n; ++x) set(l_below_, m.mul(x, v), v);
  // u ≤_J v iff u ≤_L w for some w ≤_R v.
  for (int v = 0; v < n; ++v)
    for (int y = 0; y < n; ++y) {
      int w = m.mul(v, y);
      for (std::size_t k = 0; k < words_; ++k)
        j_below_[static_cast<std::size_t>(v) * words_ + k] |=
            l_below_[static_cast<std::size_t>(w) * words_ + k];
    }

  auto classify = [&](auto&& le, std::vector<int>& cls) {
    cls.assign(n, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
      if (cls[x] >= 0) continue;
      cls[x] = next;
      for (int y = x + 1; y < n; ++y)
        if (cls[y] < 0 && le(x, y) && le(y, x)) cls[y] = next;
      ++next;
    }
    return next;
  };
  num_j_ = classify([&](int u, int v) { return j_le(u, v); }, j_class_);
  classify([&](int u, int v) { return l_le(u, v); }, l_class_);
  classify([&](int u, int v) { return r_le(u, v); }, r_class_);
  h_class_.assign(n, -1);
  {
    std::map<std::pair<int, int>, int> ids;
    for (int x = 0; x < n; ++x) {
      auto key = std::make_pair(l_class_[x], r_class_[x]);
      auto it = ids.emplace(key, static_cast<int>(ids.size())).first;
      h_class_[x] = it->second;
    }
  }
  for (int x = 0; x < n; ++x)
    if (m.mul(x, x) == x) idempotents_.push_back(x);
}

int evaluate(const Term& t, const FiniteMonoid& m, const std::map<char, int>& h) {
  switch (t.kind()) {
    case TermKind::Empty:
      return m.identity;
    case TermKind::Letter: {
      auto it = h.find(t.letter());
      if (it == h.end())
        throw std::invalid_argument(
            std::string("no monoid element assigned to letter '") +
            t.letter() + "'");
      if (it->second < 0 || it->second >= m.size)
        throw std::invalid_argument("assigned element out of range");
      return it->second;
    }
    case TermKind::Concat: {
      int acc = m.identity;
      for (const auto& child : t.children())
        acc = m.mul(acc, evaluate(*child, m, h));
      return acc;
    }
    case TermKind::Power:
      return m.pow(evaluate(*t.base(), m, h), t.exponent());
    case TermKind::Omega:
      return omega_power(m, evaluate(*t.base(), m, h));
  }
  return m.identity;
}

}  // namespace aper
