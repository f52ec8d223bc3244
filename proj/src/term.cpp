#include "aper/term.hpp"

#include <algorithm>
#include <cctype>

namespace aper {

Alphabet::Alphabet(std::string_view letters) {
  std::fill(std::begin(index_), std::end(index_), -1);
  if (letters.empty()) throw ParseError("alphabet must be nonempty", 0);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    char c = letters[i];
    if (c < 'a' || c > 'z')
      throw ParseError(std::string("alphabet letter '") + c +
                           "' is not a lowercase letter",
                       i);
    if (index_[static_cast<unsigned char>(c)] >= 0)
      throw ParseError(std::string("duplicate alphabet letter '") + c + "'", i);
    index_[static_cast<unsigned char>(c)] = static_cast<int>(i);
    letters_.push_back(c);
  }
}

TermPtr Term::make(TermKind kind, char letter, std::vector<TermPtr> children,
                   TermPtr base, std::uint64_t exponent) {
  return TermPtr(
      new Term(kind, letter, std::move(children), std::move(base), exponent));
}

const TermPtr& Term::empty() {
  static const TermPtr instance =
      make(TermKind::Empty, 0, {}, nullptr, 0);
  return instance;
}

TermPtr Term::letter(char c) { return make(TermKind::Letter, c, {}, nullptr, 0); }

TermPtr Term::concat(std::vector<TermPtr> parts) {
  std::vector<TermPtr> flat;
  for (auto& p : parts) {
    if (p->kind() == TermKind::Empty) continue;
    if (p->kind() == TermKind::Concat) {
      flat.insert(flat.end(), p->children().begin(), p->children().end());
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return empty();
  if (flat.size() == 1) return flat.front();
  return make(TermKind::Concat, 0, std::move(flat), nullptr, 0);
}

TermPtr Term::omega(TermPtr base) {
  if (base->kind() == TermKind::Empty) return empty();
  return make(TermKind::Omega, 0, {}, std::move(base), 0);
}

TermPtr Term::power(TermPtr base, std::uint64_t n) {
  if (n == 0 || base->kind() == TermKind::Empty) return empty();
  if (n == 1) return base;
  return make(TermKind::Power, 0, {}, std::move(base), n);
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Empty:
      return true;
    case TermKind::Letter:
      return a.letter() == b.letter();
    case TermKind::Concat: {
      if (a.children().size() != b.children().size()) return false;
      for (std::size_t i = 0; i < a.children().size(); ++i)
        if (!(*a.children()[i] == *b.children()[i])) return false;
      return true;
    }
    case TermKind::Omega:
      return *a.base() == *b.base();
    case TermKind::Power:
      return a.exponent() == b.exponent() && *a.base() == *b.base();
  }
  return false;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  TermPtr run() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '1') {
      ++pos_;
      skip_ws();
      if (pos_ != text_.size())
        throw ParseError("trailing input after empty-word token", pos_);
      return Term::empty();
    }
    TermPtr t = parse_seq();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_factor_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || (c >= 'a' && c <= 'z');
  }

  TermPtr parse_seq() {
    std::vector<TermPtr> parts;
    if (!at_factor_start())
      throw ParseError("expected a letter or '('", pos_);
    while (at_factor_start()) parts.push_back(parse_factor());
    return Term::concat(std::move(parts));
  }

  TermPtr parse_factor() {
    TermPtr atom = parse_atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      if (pos_ >= text_.size())
        throw ParseError("expected 'w' or an integer after '^'", pos_);
      if (text_[pos_] == 'w') {
        ++pos_;
        return Term::omega(std::move(atom));
      }
      if (!std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected 'w' or an integer after '^'", pos_);
      std::uint64_t n = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        if (n > (UINT64_MAX - 9) / 10)
          throw ParseError("exponent too large", pos_);
        n = n * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        ++pos_;
      }
      return Term::power(std::move(atom), n);
    }
    return atom;
  }

  TermPtr parse_atom() {
    skip_ws();
    char c = text_[pos_];
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      TermPtr inner = parse_seq();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw ParseError("unmatched '('", open);
      ++pos_;
      return inner;
    }
    if (c >= 'a' && c <= 'z') {
      if (!alphabet_.contains(c))
        throw ParseError(std::string("letter '") + c + "' not in alphabet '" +
                             alphabet_.letters() + "'",
                         pos_);
      ++pos_;
      return Term::letter(c);
    }
    throw ParseError("expected a letter or '('", pos_);
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

void print_seq(const Term& t, std::string& out);

void print_atom(const Term& t, std::string& out) {
  if (t.kind() == TermKind::Letter) {
    out.push_back(t.letter());
  } else {
    out.push_back('(');
    print_seq(t, out);
    out.push_back(')');
  }
}

void print_factor(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Letter:
      out.push_back(t.letter());
      break;
    case TermKind::Omega:
      print_atom(*t.base(), out);
      out += "^w";
      break;
    case TermKind::Power:
      print_atom(*t.base(), out);
      out.push_back('^');
      out += std::to_string(t.exponent());
      break;
    default:
      // Concat below a factor position always needs parentheses.
      print_atom(t, out);
      break;
  }
}

void print_seq(const Term& t, std::string& out) {
  if (t.kind() == TermKind::Concat) {
    for (const auto& child : t.children()) print_factor(*child, out);
  } else {
    print_factor(t, out);
  }
}

}  // namespace

TermPtr parse(std::string_view text, const Alphabet& alphabet) {
  return Parser(text, alphabet).run();
}

std::string print(const Term& t) {
  if (t.kind() == TermKind::Empty) return "1";
  std::string out;
  print_seq(t, out);
  return out;
}

TermPtr substitute(const Term& t, const std::map<char, TermPtr>& images) {
  switch (t.kind()) {
    case TermKind::Empty:
      return Term::empty();
    case TermKind::Letter: {
      auto it = images.find(t.letter());
      if (it == images.end())
        throw std::invalid_argument(std::string("substitution map is not total: '") +
                                    t.letter() + "' has no image");
      return it->second;
    }
    case TermKind::Concat: {
      std::vector<TermPtr> parts;
      parts.reserve(t.children().size());
      for (const auto& child : t.children())
        parts.push_back(substitute(*child, images));
      return Term::concat(std::move(parts));
    }
    case TermKind::Omega:
      return Term::omega(substitute(*t.base(), images));
    case TermKind::Power:
      return Term::power(substitute(*t.base(), images), t.exponent());
  }
  return Term::empty();
}

namespace {

void collect_content(const Term& t, std::set<char>& out) {
  switch (t.kind()) {
    case TermKind::Empty:
      break;
    case TermKind::Letter:
      out.insert(t.letter());
      break;
    case TermKind::Concat:
      for (const auto& child : t.children()) collect_content(*child, out);
      break;
    case TermKind::Omega:
    case TermKind::Power:
      collect_content(*t.base(), out);
      break;
  }
}

// Length of the flattened word, or nullopt if an ω-power occurs.
std::optional<std::uint64_t> finite_length(const Term& t, std::size_t cap) {
  switch (t.kind()) {
    case TermKind::Empty:
      return 0;
    case TermKind::Letter:
      return 1;
    case TermKind::Concat: {
      std::uint64_t total = 0;
      for (const auto& child : t.children()) {
        auto len = finite_length(*child, cap);
        if (!len) return std::nullopt;
        total += *len;
        if (total > cap)
          throw LimitError("finite word exceeds the word-length cap of " +
                           std::to_string(cap));
      }
      return total;
    }
    case TermKind::Omega:
      return std::nullopt;
    case TermKind::Power: {
      auto len = finite_length(*t.base(), cap);
      if (!len) return std::nullopt;
      if (*len != 0 && t.exponent() > cap / *len)
        throw LimitError("finite word exceeds the word-length cap of " +
                         std::to_string(cap));
      return *len * t.exponent();
    }
  }
  return std::nullopt;
}

void append_word(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Empty:
      break;
    case TermKind::Letter:
      out.push_back(t.letter());
      break;
    case TermKind::Concat:
      for (const auto& child : t.children()) append_word(*child, out);
      break;
    case TermKind::Omega:
      break;  // unreachable: callers check finite_length first
    case TermKind::Power: {
      std::string unit;
      append_word(*t.base(), unit);
      for (std::uint64_t i = 0; i < t.exponent(); ++i) out += unit;
      break;
    }
  }
}

}  // namespace

std::set<char> content(const Term& t) {
  std::set<char> out;
  collect_content(t, out);
  return out;
}

std::optional<std::string> is_finite_word(const Term& t, std::size_t length_cap) {
  auto len = finite_length(t, length_cap);
  if (!len) return std::nullopt;
  std::string word;
  word.reserve(static_cast<std::size_t>(*len));
  append_word(t, word);
  return word;
}

TermPtr reversed(const Term& t) {
  switch (t.kind()) {
    case TermKind::Empty:
      return Term::empty();
    case TermKind::Letter:
      return Term::letter(t.letter());
    case TermKind::Concat: {
      std::vector<TermPtr> parts;
      parts.reserve(t.children().size());
      for (auto it = t.children().rbegin(); it != t.children().rend(); ++it)
        parts.push_back(reversed(**it));
      return Term::concat(std::move(parts));
    }
    case TermKind::Omega:
      return Term::omega(reversed(*t.base()));
    case TermKind::Power:
      return Term::power(reversed(*t.base()), t.exponent());
  }
  return Term::empty();
}

std::size_t omega_node_count(const Term& t) {
  switch (t.kind()) {
    case TermKind::Empty:
    case TermKind::Letter:
      return 0;
    case TermKind::Concat: {
      std::size_t total = 0;
      for (const auto& child : t.children()) total += omega_node_count(*child);
      return total;
    }
    case TermKind::Omega:
      return 1 + omega_node_count(*t.base());
    case TermKind::Power:
      return omega_node_count(*t.base());
  }
  return 0;
}

}  // namespace aper
