#include "aper/automata.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace aper {

namespace {

void check_same_alphabet(const Nfa& x, const Nfa& y) {
  if (!(x.alphabet == y.alphabet))
    throw std::invalid_argument("automata over different alphabets");
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Adjacency lists of ε-edges, then closure by BFS.
std::vector<int> eps_closure(const Nfa& n, std::vector<int> states) {
  std::vector<std::vector<int>> eps(n.num_states);
  for (const auto& t : n.transitions)
    if (t[1] == kEpsilon) eps[t[0]].push_back(t[2]);
  std::vector<char> seen(n.num_states, 0);
  std::deque<int> queue;
  for (int s : states)
    if (!seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int t : eps[s])
      if (!seen[t]) {
        seen[t] = 1;
        queue.push_back(t);
      }
  }
  std::vector<int> out;
  for (int s = 0; s < n.num_states; ++s)
    if (seen[s]) out.push_back(s);
  return out;
}

void shifted_copy(const Nfa& src, int offset, Nfa& dst) {
  for (const auto& t : src.transitions)
    dst.transitions.push_back({t[0] + offset, t[1], t[2] + offset});
}

}  // namespace

Nfa empty_language(const Alphabet& alphabet) {
  Nfa n{alphabet, 1, {}, {0}, {}};
  return n;
}

Nfa from_words(const std::set<std::string>& words, const Alphabet& alphabet) {
  // Trie; state 0 is the root.
  Nfa n{alphabet, 1, {}, {0}, {}};
  std::vector<std::map<int, int>> edges(1);
  for (const auto& w : words) {
    int cur = 0;
    for (char c : w) {
      int letter = alphabet.index(c);
      if (letter < 0)
        throw std::invalid_argument(std::string("word letter '") + c +
                                    "' outside the alphabet");
      auto it = edges[cur].find(letter);
      if (it == edges[cur].end()) {
        int fresh = n.num_states++;
        edges.emplace_back();
        edges[cur][letter] = fresh;
        n.transitions.push_back({cur, letter, fresh});
        cur = fresh;
      } else {
        cur = it->second;
      }
    }
    n.accepting.push_back(cur);
  }
  n.accepting = sorted_unique(std::move(n.accepting));
  return n;
}

Nfa union_of(const Nfa& x, const Nfa& y) {
  check_same_alphabet(x, y);
  Nfa out{x.alphabet, x.num_states + y.num_states, {}, {}, {}};
  shifted_copy(x, 0, out);
  shifted_copy(y, x.num_states, out);
  out.initial = x.initial;
  for (int s : y.initial) out.initial.push_back(s + x.num_states);
  out.accepting = x.accepting;
  for (int s : y.accepting) out.accepting.push_back(s + x.num_states);
  return out;
}

Nfa concat(const Nfa& x, const Nfa& y) {
  check_same_alphabet(x, y);
  Nfa out{x.alphabet, x.num_states + y.num_states, {}, x.initial, {}};
  shifted_copy(x, 0, out);
  shifted_copy(y, x.num_states, out);
  for (int a : x.accepting)
    for (int i : y.initial) out.transitions.push_back({a, kEpsilon, i + x.num_states});
  for (int s : y.accepting) out.accepting.push_back(s + x.num_states);
  return out;
}

Nfa star(const Nfa& x) {
  Nfa out{x.alphabet, x.num_states + 1, {}, {}, {}};
  shifted_copy(x, 1, out);
  int hub = 0;
  out.initial = {hub};
  out.accepting = {hub};
  for (int i : x.initial) out.transitions.push_back({hub, kEpsilon, i + 1});
  for (int a : x.accepting) out.transitions.push_back({a + 1, kEpsilon, hub});
  return out;
}

Nfa reverse(const Nfa& x) {
  Nfa out{x.alphabet, x.num_states, {}, x.accepting, x.initial};
  for (const auto& t : x.transitions) out.transitions.push_back({t[2], t[1], t[0]});
  return out;
}

Nfa left_quotient(const Nfa& x, char a) {
  int letter = x.alphabet.index(a);
  if (letter < 0)
    throw std::invalid_argument("quotient letter outside the alphabet");
  std::vector<int> reach = eps_closure(x, x.initial);
  std::vector<char> in_reach(x.num_states, 0);
  for (int s : reach) in_reach[s] = 1;
  std::vector<int> after;
  for (const auto& t : x.transitions)
    if (t[1] == letter && in_reach[t[0]]) after.push_back(t[2]);
  Nfa out = x;
  out.initial = sorted_unique(std::move(after));
  return out;
}

Nfa right_quotient(const Nfa& x, char a) {
  int letter = x.alphabet.index(a);
  if (letter < 0)
    throw std::invalid_argument("quotient letter outside the alphabet");
  // States that reach an accepting state through ε-edges only.
  Nfa rev = reverse(x);
  std::vector<int> back = eps_closure(rev, rev.initial);  // = x.accepting
  std::vector<char> reaches_accept(x.num_states, 0);
  for (int s : back) reaches_accept[s] = 1;
  std::vector<int> mid;
  for (const auto& t : x.transitions)
    if (t[1] == letter && reaches_accept[t[2]]) mid.push_back(t[0]);
  Nfa out = x;
  out.accepting = sorted_unique(eps_closure(rev, sorted_unique(std::move(mid))));
  return out;
}

Nfa image(const Nfa& x, const std::map<char, std::string>& word_images,
          const Alphabet& target) {
  Nfa out{target, x.num_states, {}, x.initial, x.accepting};
  for (const auto& t : x.transitions) {
    if (t[1] == kEpsilon) {
      out.transitions.push_back(t);
      continue;
    }
    char letter = x.alphabet.letter(t[1]);
    auto it = word_images.find(letter);
    if (it == word_images.end())
      throw std::invalid_argument(
          std::string("no image word for letter '") + letter + "'");
    const std::string& w = it->second;
    if (w.empty()) {
      out.transitions.push_back({t[0], kEpsilon, t[2]});
      continue;
    }
    int cur = t[0];
    for (std::size_t i = 0; i < w.size(); ++i) {
      int li = target.index(w[i]);
      if (li < 0)
        throw std::invalid_argument(std::string("image letter '") + w[i] +
                                    "' outside the target alphabet");
      int next = (i + 1 == w.size()) ? t[2] : out.num_states++;
      out.transitions.push_back({cur, li, next});
      cur = next;
    }
  }
  return out;
}

Nfa restrict_letters(const Nfa& x, const std::set<char>& keep) {
  Nfa out{x.alphabet, x.num_states, {}, x.initial, x.accepting};
  for (const auto& t : x.transitions)
    if (t[1] == kEpsilon || keep.count(x.alphabet.letter(t[1])))
      out.transitions.push_back(t);
  return out;
}

Dfa determinize(const Nfa& x, std::size_t state_cap) {
  const int nletters = static_cast<int>(x.alphabet.size());
  std::vector<std::vector<std::vector<int>>> by_letter(
      x.num_states, std::vector<std::vector<int>>(nletters));
  std::vector<std::vector<int>> eps(x.num_states);
  for (const auto& t : x.transitions) {
    if (t[1] == kEpsilon)
      eps[t[0]].push_back(t[2]);
    else
      by_letter[t[0]][t[1]].push_back(t[2]);
  }
  auto closure = [&](std::vector<int> states) {
    std::vector<char> seen(x.num_states, 0);
    std::deque<int> queue;
    for (int s : states)
      if (!seen[s]) {
        seen[s] = 1;
        queue.push_back(s);
      }
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      for (int t : eps[s])
        if (!seen[t]) {
          seen[t] = 1;
          queue.push_back(t);
        }
    }
    std::vector<int> out;
    for (int s = 0; s < x.num_states; ++s)
      if (seen[s]) out.push_back(s);
    return out;
  };
  std::vector<char> accept(x.num_states, 0);
  for (int s : x.accepting) accept[s] = 1;

  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> subsets;
  Dfa d{x.alphabet, 0, {}, 0, {}};
  auto intern = [&](std::vector<int> subset) {
    auto it = ids.find(subset);
    if (it != ids.end()) return it->second;
    if (subsets.size() >= state_cap)
      throw LimitError("determinization exceeds the DFA state cap of " +
                       std::to_string(state_cap));
    int id = static_cast<int>(subsets.size());
    ids.emplace(subset, id);
    subsets.push_back(std::move(subset));
    d.next.emplace_back(nletters, -1);
    bool acc = false;
    for (int s : subsets.back()) acc = acc || accept[s];
    d.accepting.push_back(acc);
    return id;
  };

  d.initial = intern(closure(x.initial));
  for (int cur = 0; cur < static_cast<int>(subsets.size()); ++cur) {
    for (int a = 0; a < nletters; ++a) {
      std::vector<int> moved;
      for (int s : subsets[cur])
        moved.insert(moved.end(), by_letter[s][a].begin(), by_letter[s][a].end());
      int target = intern(closure(sorted_unique(std::move(moved))));
      d.next[cur][a] = target;
    }
  }
  d.num_states = static_cast<int>(subsets.size());
  return d;
}

Dfa minimize(const Dfa& d) {
  const int nletters = static_cast<int>(d.alphabet.size());
  // Reachable restriction.
  std::vector<int> order;
  std::vector<int> remap(d.num_states, -1);
  order.push_back(d.initial);
  remap[d.initial] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int a = 0; a < nletters; ++a) {
      int t = d.next[order[i]][a];
      if (remap[t] < 0) {
        remap[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  const int n = static_cast<int>(order.size());
  std::vector<std::vector<int>> next(n, std::vector<int>(nletters));
  std::vector<bool> accepting(n);
  for (int i = 0; i < n; ++i) {
    accepting[i] = d.accepting[order[i]];
    for (int a = 0; a < nletters; ++a) next[i][a] = remap[d.next[order[i]][a]];
  }

  // Moore partition refinement.
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = accepting[i] ? 1 : 0;
  int num_classes = 2;
  // All-accepting or all-rejecting inputs start with one class.
  {
    bool has0 = false, has1 = false;
    for (int i = 0; i < n; ++i) (cls[i] ? has1 : has0) = true;
    if (!has0 || !has1) {
      std::fill(cls.begin(), cls.end(), 0);
      num_classes = 1;
    }
  }
  while (true) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> fresh(n);
    for (int i = 0; i < n; ++i) {
      std::vector<int> sig;
      sig.reserve(nletters + 1);
      sig.push_back(cls[i]);
      for (int a = 0; a < nletters; ++a) sig.push_back(cls[next[i][a]]);
      auto it = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size())).first;
      fresh[i] = it->second;
    }
    int count = static_cast<int>(sig_ids.size());
    cls = std::move(fresh);
    if (count == num_classes) break;
    num_classes = count;
  }

  // Quotient, then canonical BFS renumbering from the initial class.
  std::vector<int> class_rep(num_classes, -1);
  for (int i = 0; i < n; ++i)
    if (class_rep[cls[i]] < 0) class_rep[cls[i]] = i;
  std::vector<int> bfs_id(num_classes, -1);
  std::vector<int> bfs_order;
  bfs_id[cls[0]] = 0;
  bfs_order.push_back(cls[0]);
  for (std::size_t i = 0; i < bfs_order.size(); ++i) {
    int rep = class_rep[bfs_order[i]];
    for (int a = 0; a < nletters; ++a) {
      int target = cls[next[rep][a]];
      if (bfs_id[target] < 0) {
        bfs_id[target] = static_cast<int>(bfs_order.size());
        bfs_order.push_back(target);
      }
    }
  }
  Dfa out{d.alphabet, num_classes, {}, 0, {}};
  out.next.assign(num_classes, std::vector<int>(nletters));
  out.accepting.assign(num_classes, false);
  for (int c = 0; c < num_classes; ++c) {
    int rep = class_rep[bfs_order[c]];
    out.accepting[c] = accepting[rep];
    for (int a = 0; a < nletters; ++a) out.next[c][a] = bfs_id[cls[next[rep][a]]];
  }
  return out;
}

bool equivalent(const Dfa& a, const Dfa& b) {
  return minimize(a) == minimize(b);
}

bool contains(const Dfa& d, std::string_view word) {
  int cur = d.initial;
  for (char c : word) {
    int letter = d.alphabet.index(c);
    if (letter < 0) return false;
    cur = d.next[cur][letter];
  }
  return d.accepting[cur];
}

std::vector<std::string> enumerate_words(const Dfa& d, std::size_t maxlen) {
  // States from which an accepting state is reachable; used to prune.
  std::vector<char> live(d.num_states, 0);
  {
    std::vector<std::vector<int>> preds(d.num_states);
    for (int s = 0; s < d.num_states; ++s)
      for (int t : d.next[s]) preds[t].push_back(s);
    std::deque<int> queue;
    for (int s = 0; s < d.num_states; ++s)
      if (d.accepting[s]) {
        live[s] = 1;
        queue.push_back(s);
      }
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      for (int p : preds[s])
        if (!live[p]) {
          live[p] = 1;
          queue.push_back(p);
        }
    }
  }
  std::vector<std::string> out;
  std::vector<std::pair<int, std::string>> level;
  if (live[d.initial]) level.emplace_back(d.initial, "");
  for (std::size_t len = 0; len <= maxlen; ++len) {
    for (const auto& [state, word] : level)
      if (d.accepting[state]) out.push_back(word);
    if (len == maxlen) break;
    std::vector<std::pair<int, std::string>> fresh;
    for (const auto& [state, word] : level)
      for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
        int target = d.next[state][a];
        if (live[target]) fresh.emplace_back(target, word + d.alphabet.letter(a));
      }
    level = std::move(fresh);
  }
  return out;
}

TransitionMonoidResult transition_monoid(const Dfa& d, std::size_t element_cap) {
  const int n = d.num_states;
  const int nletters = static_cast<int>(d.alphabet.size());
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> transforms;
  std::vector<std::string> labels;

  auto intern = [&](std::vector<int> t, const std::string& label) {
    auto it = ids.find(t);
    if (it != ids.end()) return std::make_pair(it->second, false);
    if (transforms.size() >= element_cap)
      throw LimitError("transition monoid exceeds the element cap of " +
                       std::to_string(element_cap));
    int id = static_cast<int>(transforms.size());
    ids.emplace(t, id);
    transforms.push_back(std::move(t));
    labels.push_back(label);
    return std::make_pair(id, true);
  };

  std::vector<int> identity(n);
  for (int s = 0; s < n; ++s) identity[s] = s;
  intern(std::move(identity), "1");
  for (std::size_t i = 0; i < transforms.size(); ++i)
    for (int a = 0; a < nletters; ++a) {
      std::vector<int> t(n);
      for (int s = 0; s < n; ++s) t[s] = d.next[transforms[i][s]][a];
      std::string label =
          (i == 0 ? std::string() : labels[i]) + d.alphabet.letter(a);
      intern(std::move(t), label);
    }

  const int size = static_cast<int>(transforms.size());
  std::vector<int> table(static_cast<std::size_t>(size) * size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      std::vector<int> t(n);
      for (int s = 0; s < n; ++s) t[s] = transforms[j][transforms[i][s]];
      table[static_cast<std::size_t>(i) * size + j] = ids.at(t);
    }

  TransitionMonoidResult result{
      make_monoid(size, std::move(table), 0, std::move(labels),
                  /*assoc_check_bound=*/0, nullptr),
      {}};
  for (int a = 0; a < nletters; ++a) {
    std::vector<int> t(n);
    for (int s = 0; s < n; ++s) t[s] = d.next[s][a];
    result.letter_to_element[d.alphabet.letter(a)] = ids.at(t);
  }
  return result;
}

namespace {

// Non-accepting states whose transitions all loop back to themselves; the
// initial state is kept so an empty language still prints one state.
std::vector<char> sink_mask(const Dfa& d) {
  std::vector<char> sink(d.num_states, 0);
  for (int s = 0; s < d.num_states; ++s) {
    if (d.accepting[s] || s == d.initial) continue;
    bool all_self = true;
    for (int t : d.next[s]) all_self = all_self && t == s;
    sink[s] = all_self;
  }
  return sink;
}

}  // namespace

std::string to_text(const Dfa& d) {
  std::vector<char> sink = sink_mask(d);
  std::vector<int> remap(d.num_states, -1);
  std::vector<int> order;
  remap[d.initial] = 0;
  order.push_back(d.initial);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int t : d.next[order[i]])
      if (!sink[t] && remap[t] < 0) {
        remap[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
  std::ostringstream out;
  out << "dfa " << order.size() << ' ' << d.alphabet.letters() << "\n";
  for (std::size_t i = 0; i < order.size(); ++i) {
    out << "state " << i;
    if (order[i] == d.initial) out << " initial";
    if (d.accepting[order[i]]) out << " accepting";
    out << "\n";
  }
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
      int t = d.next[order[i]][a];
      if (!sink[t])
        out << "edge " << i << ' ' << d.alphabet.letter(a) << ' ' << remap[t]
            << "\n";
    }
  return out.str();
}

std::string to_dot(const Dfa& d) {
  std::vector<char> sink = sink_mask(d);
  std::vector<int> remap(d.num_states, -1);
  std::vector<int> order;
  remap[d.initial] = 0;
  order.push_back(d.initial);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int t : d.next[order[i]])
      if (!sink[t] && remap[t] < 0) {
        remap[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
  std::ostringstream out;
  out << "digraph dfa {\n  rankdir=LR;\n  start [shape=point];\n";
  for (std::size_t i = 0; i < order.size(); ++i)
    out << "  q" << i << " [shape="
        << (d.accepting[order[i]] ? "doublecircle" : "circle") << "];\n";
  out << "  start -> q0;\n";
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
      int t = d.next[order[i]][a];
      if (!sink[t])
        out << "  q" << i << " -> q" << remap[t] << " [label=\""
            << d.alphabet.letter(a) << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace aper
