#include "doctest.h"

#include <random>

#include "aper/term.hpp"
#include "support/gen.hpp"

using namespace aper;

TEST_CASE("alphabet validation") {
  Alphabet ab("ab");
  CHECK(ab.size() == 2);
  CHECK(ab.contains('a'));
  CHECK(!ab.contains('c'));
  CHECK(ab.index('b') == 1);
  CHECK_THROWS_AS(Alphabet(""), ParseError);
  CHECK_THROWS_AS(Alphabet("aa"), ParseError);
  CHECK_THROWS_AS(Alphabet("aB"), ParseError);
}

TEST_CASE("parse builds smart-constructed trees") {
  Alphabet ab("ab");

  SUBCASE("plain concatenation") {
    TermPtr t = parse("ab", ab);
    REQUIRE(t->kind() == TermKind::Concat);
    REQUIRE(t->children().size() == 2);
    CHECK(t->children()[0]->letter() == 'a');
    CHECK(t->children()[1]->letter() == 'b');
  }
  SUBCASE("omega power of a group") {
    TermPtr t = parse("(ab)^w a", ab);
    REQUIRE(t->kind() == TermKind::Concat);
    REQUIRE(t->children().size() == 2);
    CHECK(t->children()[0]->kind() == TermKind::Omega);
    CHECK(t->children()[0]->base()->kind() == TermKind::Concat);
    CHECK(t->children()[1]->letter() == 'a');
  }
  SUBCASE("exponent normalization") {
    CHECK(parse("a^1", ab)->kind() == TermKind::Letter);
    CHECK(parse("a^0", ab)->kind() == TermKind::Empty);
    CHECK(parse("a^3", ab)->kind() == TermKind::Power);
    CHECK(parse("a^3", ab)->exponent() == 3);
  }
  SUBCASE("units collapse") {
    CHECK(parse("1", ab)->kind() == TermKind::Empty);
    CHECK(parse("(a^0)^w", ab)->kind() == TermKind::Empty);
    CHECK(*parse("a(b^0)", ab) == *parse("a", ab));
    CHECK(*parse("(a)(b)", ab) == *parse("ab", ab));
  }
  SUBCASE("nested concats are flattened") {
    TermPtr t = parse("a(b(ab))", ab);
    REQUIRE(t->kind() == TermKind::Concat);
    CHECK(t->children().size() == 4);
  }
  SUBCASE("whitespace ignored") {
    CHECK(*parse(" ( a b ) ^ w ", ab) == *parse("(ab)^w", ab));
  }
  SUBCASE("errors carry positions") {
    CHECK_THROWS_AS(parse("a(", ab), ParseError);
    CHECK_THROWS_AS(parse("a)", ab), ParseError);
    CHECK_THROWS_AS(parse("c", ab), ParseError);
    CHECK_THROWS_AS(parse("a^", ab), ParseError);
    CHECK_THROWS_AS(parse("", ab), ParseError);
    CHECK_THROWS_AS(parse("1a", ab), ParseError);
    try {
      parse("ac", ab);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 1);
    }
  }
}

TEST_CASE("print") {
  Alphabet ab("ab");
  CHECK(print(Term::empty()) == "1");
  CHECK(print(parse("(ab)^w", ab)) == "(ab)^w");
  CHECK(print(parse("a^3", ab)) == "a^3");
  CHECK(print(parse("((ab)^2)^w", ab)) == "((ab)^2)^w");
  CHECK(print(parse("a^w b", ab)) == "a^wb");
}

TEST_CASE("parse-print round trip on random terms") {
  Alphabet abc("abc");
  std::mt19937 rng(20240811);
  for (int i = 0; i < 500; ++i) {
    TermPtr t = testsupport::random_term(rng, abc, 3, 8);
    CAPTURE(print(t));
    CHECK(*parse(print(t), abc) == *t);
  }
}

TEST_CASE("substitute") {
  Alphabet ab("ab");
  Alphabet bc("bc");

  SUBCASE("examples") {
    std::map<char, TermPtr> m{{'b', parse("ab", ab)}};
    CHECK(*substitute(*parse("b^w", Alphabet("b")), m) == *parse("(ab)^w", ab));

    std::map<char, TermPtr> m2{{'b', parse("a^w", ab)}, {'c', parse("a", ab)}};
    CHECK(*substitute(*parse("bc", bc), m2) == *parse("a^w a", ab));

    std::map<char, TermPtr> m3{{'b', Term::empty()}};
    CHECK(substitute(*parse("b", Alphabet("b")), m3)->kind() == TermKind::Empty);
  }
  SUBCASE("functoriality up to smart constructors") {
    Alphabet cd("cd");
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
      TermPtr t = testsupport::random_term(rng, cd, 2, 6);
      std::map<char, TermPtr> f{{'c', testsupport::random_term(rng, bc, 1, 4)},
                                {'d', testsupport::random_term(rng, bc, 1, 4)}};
      std::map<char, TermPtr> g{{'b', testsupport::random_term(rng, ab, 1, 4)},
                                {'c', testsupport::random_term(rng, ab, 1, 4)}};
      std::map<char, TermPtr> composed{{'c', substitute(*f.at('c'), g)},
                                       {'d', substitute(*f.at('d'), g)}};
      CHECK(*substitute(*substitute(*t, f), g) == *substitute(*t, composed));
    }
  }
  SUBCASE("content of a substitution") {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
      TermPtr t = testsupport::random_term(rng, bc, 2, 6);
      std::map<char, TermPtr> f{{'b', testsupport::random_term(rng, ab, 1, 4)},
                                {'c', testsupport::random_term(rng, ab, 1, 4)}};
      std::set<char> expected;
      for (char b : content(*t)) {
        auto part = content(*f.at(b));
        expected.insert(part.begin(), part.end());
      }
      CHECK(content(*substitute(*t, f)) == expected);
    }
  }
  SUBCASE("missing image is an error") {
    std::map<char, TermPtr> partial{{'b', parse("a", ab)}};
    CHECK_THROWS_AS(substitute(*parse("bc", bc), partial), std::invalid_argument);
  }
}

TEST_CASE("content") {
  Alphabet abc("abc");
  CHECK(content(*parse("(ab)^w c", abc)) == std::set<char>{'a', 'b', 'c'});
  CHECK(content(*Term::empty()).empty());
  CHECK(content(*parse("(a^w)^w", abc)) == std::set<char>{'a'});
}

TEST_CASE("is_finite_word") {
  Alphabet ab("ab");
  CHECK(is_finite_word(*parse("a^3 b", ab)) == std::string("aaab"));
  CHECK(is_finite_word(*parse("(a^0)^w", ab)) == std::string(""));
  CHECK(!is_finite_word(*parse("a^w", ab)).has_value());
  CHECK(is_finite_word(*parse("(ab)^2(ba)^3", ab)) == std::string("ababbababa"));
  CHECK_THROWS_AS(is_finite_word(*parse("a^999", ab), 100), LimitError);
}

TEST_CASE("reversed") {
  Alphabet ab("ab");
  CHECK(*reversed(*parse("(ab)^w a", ab)) == *parse("a(ba)^w", ab));
  CHECK(*reversed(*parse("a^3 b", ab)) == *parse("b a^3", ab));
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    TermPtr t = testsupport::random_term(rng, ab, 3, 8);
    CHECK(*reversed(*reversed(*t)) == *t);
  }
}

TEST_CASE("omega_node_count") {
  Alphabet ab("ab");
  CHECK(omega_node_count(*parse("(ab)^w a", ab)) == 1);
  CHECK(omega_node_count(*parse("((a^w b)^w)^w", ab)) == 3);
  CHECK(omega_node_count(*parse("a^5", ab)) == 0);
}
