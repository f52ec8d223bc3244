#include "doctest.h"

#include <random>

#include "aper/kclass.hpp"
#include "aper/normal_form.hpp"
#include "support/gen.hpp"

using namespace aper;

namespace {

std::string canon_str(const char* text, const Alphabet& a) {
  return canonicalize(*parse(text, a)).to_string();
}

}  // namespace

TEST_CASE("canonicalize examples") {
  Alphabet ab("ab");

  SUBCASE("proper powers collapse") {
    CHECK(canon_str("(aa)^w", ab) == "a^w");
    CHECK(canon_str("(a^3)^w", ab) == "a^w");
    CHECK(canon_str("((ab)^2)^w", ab) == "(ab)^w");
    CHECK(canon_str("(abab)^w", ab) == "(ab)^w");
  }
  SUBCASE("rotation commutes through the context") {
    CHECK(canonicalize(*parse("(ab)^w a", ab)) ==
          canonicalize(*parse("a(ba)^w", ab)));
    CHECK(canon_str("(ba)^w", ab) == "b(ab)^wa");
  }
  SUBCASE("units") {
    CHECK(canon_str("(a^0)^w", ab) == "1");
    CHECK(canon_str("a(b^0)", ab) == "a");
    CHECK(canonicalize(*Term::empty()).items().empty());
  }
  SUBCASE("absorption across boundaries") {
    CHECK(canon_str("ab(ab)^w", ab) == "(ab)^w");
    CHECK(canon_str("(ab)^w ab", ab) == "(ab)^w");
    CHECK(canon_str("aabab(ab)^w", ab) == "a(ab)^w");
    CHECK(canon_str("(ab)^w(ab)^w", ab) == "(ab)^w");
  }
  SUBCASE("idempotent bases collapse (generalized (x^w)^w)") {
    CHECK(canon_str("(a^w)^w", ab) == "a^w");
    CHECK(canon_str("((ba)^w)^w", ab) == canon_str("(ba)^w", ab));
    CHECK(canon_str("((a^w b)^w)^w", ab) == canon_str("(a^w b)^w", ab));
  }
  SUBCASE("rank-two rotation") {
    // (a^w b)^w rotates its base to the least form [b, a^w].
    CHECK(canon_str("(a^w b)^w", ab) == "a^w(ba^w)^wb");
    CHECK(canonicalize(*parse("(a^w b)^w", ab)) ==
          canonicalize(*parse("a^w (b a^w)^w b", ab)));
  }
}

TEST_CASE("normal form structure invariants") {
  Alphabet ab("ab");
  std::mt19937 rng(404);

  // No ω of ε, no adjacent equal-base ω-powers, no absorbable base copy,
  // primitive and rotation-least bases.
  struct Checker {
    static void check_seq(const NfSeq& items) {
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (!items[i].is_omega) continue;
        const NfSeq& b = items[i].base;
        REQUIRE(!b.empty());
        check_seq(b);
        if (i + 1 < items.size() && items[i + 1].is_omega)
          CHECK(compare(b, items[i + 1].base) != 0);
        std::size_t m = b.size();
        if (i >= m)
          CHECK(!std::equal(b.begin(), b.end(), items.begin() + (i - m)));
        if (i + m < items.size())
          CHECK(!std::equal(b.begin(), b.end(), items.begin() + i + 1));
        // primitivity: no proper period
        for (std::size_t p = 1; p < m; ++p) {
          if (m % p != 0) continue;
          bool periodic = true;
          for (std::size_t q = p; q < m && periodic; ++q)
            periodic = b[q] == b[q - p];
          CHECK(!periodic);
        }
        // rotation-least
        for (std::size_t r = 1; r < m; ++r) {
          NfSeq rot(b.begin() + r, b.end());
          rot.insert(rot.end(), b.begin(), b.begin() + r);
          CHECK(compare(b, rot) <= 0);
        }
      }
    }
  };
  for (int i = 0; i < 300; ++i) {
    TermPtr t = testsupport::random_term(rng, ab, 3, 8);
    CAPTURE(print(t));
    Checker::check_seq(canonicalize(*t).items());
  }
}

TEST_CASE("canonicalize is idempotent") {
  Alphabet abc("abc");
  std::mt19937 rng(808);
  for (int i = 0; i < 300; ++i) {
    TermPtr t = testsupport::random_term(rng, abc, 3, 8);
    NormalForm nf = canonicalize(*t);
    CAPTURE(print(t));
    CHECK(canonicalize(*nf.to_term()) == nf);
    CHECK(canonicalize(*parse(nf.to_string(), abc)) == nf);
  }
}

TEST_CASE("equal") {
  Alphabet ab("ab");
  KClassEngine eng{ab};
  EqualOptions opts;
  opts.engine = &eng;

  SUBCASE("absorption identities over corpus bases") {
    for (const char* base : {"a", "ab", "aba", "(ab)^w", "a^w b"}) {
      std::string x(base);
      CAPTURE(x);
      CHECK(equal(*parse(x + "(" + x + ")^w", ab), *parse("(" + x + ")^w", ab),
                  ab, opts));
      CHECK(equal(*parse("(" + x + ")^w" + x, ab), *parse("(" + x + ")^w", ab),
                  ab, opts));
    }
  }
  SUBCASE("distinct pairs") {
    CHECK(!equal(*parse("a^w", ab), *parse("b^w", ab), ab, opts));
    CHECK(!equal(*parse("a^w b a^w", ab), *parse("a^w b a^w b a^w", ab), ab, opts));
    CHECK(!equal(*parse("(ab)^w", ab), *parse("(ba)^w", ab), ab, opts));
    CHECK(!equal(*parse("a", ab), *parse("aa", ab), ab, opts));
  }
  SUBCASE("equal is an equivalence on a corpus") {
    const char* corpus[] = {"(ab)^w a",  "a(ba)^w",   "(ab)^w ab a",
                            "(aa)^w",    "a^w",       "a a^w",
                            "(a^w)^w",   "(ab)^w",    "(abab)^w"};
    std::vector<TermPtr> terms;
    for (const char* c : corpus) terms.push_back(parse(c, ab));
    for (const auto& t : terms) CHECK(equal(*t, *t, ab, opts));
    for (std::size_t i = 0; i < terms.size(); ++i)
      for (std::size_t j = 0; j < terms.size(); ++j) {
        CHECK(equal(*terms[i], *terms[j], ab, opts) ==
              equal(*terms[j], *terms[i], ab, opts));
        for (std::size_t k = 0; k < terms.size(); ++k)
          if (equal(*terms[i], *terms[j], ab, opts) &&
              equal(*terms[j], *terms[k], ab, opts))
            CHECK(equal(*terms[i], *terms[k], ab, opts));
      }
  }
}

TEST_CASE("separate") {
  Alphabet ab("ab");
  KClassEngine eng{ab};

  SUBCASE("a vs aa separates exactly at k=2") {
    CHECK(eng.ef_game_oracle("a", "aa", 1));    // oracle: not at depth 1
    CHECK(!eng.ef_game_oracle("a", "aa", 2));   // oracle: separated at 2
    auto s = separate(*parse("a", ab), *parse("aa", ab), 4, eng);
    REQUIRE(s.has_value());
    CHECK(s->depth == 2);
    CHECK(s->first == eng.classify("a", 2));
    CHECK(s->second == eng.classify("aa", 2));
  }
  SUBCASE("identical terms never separate") {
    CHECK(!separate(*parse("(ab)^w a", ab), *parse("a(ba)^w", ab), 4, eng)
               .has_value());
  }
  SUBCASE("(ab)^w vs (ba)^w separates by its first letter at k=2") {
    // Oracle on unfoldings: distinguished at depth 2, not at depth 1.
    CHECK(eng.ef_game_oracle(unfold(*parse("(ab)^w", ab), 3),
                             unfold(*parse("(ba)^w", ab), 3), 1));
    CHECK(!eng.ef_game_oracle(unfold(*parse("(ab)^w", ab), 3),
                              unfold(*parse("(ba)^w", ab), 3), 2));
    auto s = separate(*parse("(ab)^w", ab), *parse("(ba)^w", ab), 4, eng);
    REQUIRE(s.has_value());
    CHECK(s->depth == 2);
  }
  SUBCASE("number of b-blocks separates a^w b a^w pairs at k=2") {
    auto s = separate(*parse("a^w b a^w", ab),
                      *parse("a^w b a^w b a^w", ab), 4, eng);
    REQUIRE(s.has_value());
    CHECK(s->depth == 2);
  }
}

TEST_CASE("unfold") {
  Alphabet ab("ab");
  CHECK(unfold(*parse("(ab)^w", ab), 3) == "ababab");
  CHECK(unfold(*parse("a^w b a^w", ab), 2) == "aabaa");
  CHECK(unfold(*parse("a^3", ab), 5) == "aaa");  // integer powers stay
  CHECK(unfold(*Term::empty(), 4) == "");
  CHECK_THROWS_AS(unfold(*parse("a^w", ab), 0), std::invalid_argument);
  CHECK_THROWS_AS(unfold(*parse("(a^w)^w", ab), 1000, 100), LimitError);
}

TEST_CASE("rewrite soundness: projections agree across each rule") {
  Alphabet ab("ab");
  KClassEngine eng{ab};
  auto agree = [&](const char* l, const char* r) {
    for (int k = 0; k <= 4; ++k) {
      CAPTURE(l);
      CAPTURE(r);
      CAPTURE(k);
      CHECK(eng.project(*parse(l, ab), k) == eng.project(*parse(r, ab), k));
    }
  };
  agree("(a^w)^w", "a^w");                    // R1
  agree("((ab)^w)^w", "(ab)^w");              // R1
  agree("(ab)^w(ab)^w", "(ab)^w");            // R2
  agree("ab(ab)^w", "(ab)^w");                // R3 left
  agree("(ab)^w ab", "(ab)^w");               // R3 right
  agree("(abab)^w", "(ab)^w");                // R4
  agree("((a^w b)^3)^w", "(a^w b)^w");        // R4 at rank 2
  agree("(ab)^w a", "a(ba)^w");               // R5
  agree("(a^w b)^w", "a^w(b a^w)^w b");       // R5 at rank 2
}

TEST_CASE("middles between ω-powers of finite words minimize") {
  Alphabet ab("ab");
  KClassEngine eng{ab};
  EqualOptions opts;
  opts.engine = &eng;
  // A copy of b pulled out of b^ω completes an ab absorbed by (ab)^ω.
  CHECK(equal(*parse("(ab)^w a b^w", ab), *parse("(ab)^w b^w", ab), ab, opts));
  CHECK(canon_str("(ab)^w a b^w", ab) == "(ab)^wb^w");
  CHECK(equal(*parse("a^w b (ab)^w", ab), *parse("a^w (ab)^w", ab), ab, opts));
  // Genuinely distinct middles survive.
  CHECK(!equal(*parse("a^w b a^w", ab), *parse("a^w a^w", ab), ab, opts));
  CHECK(!equal(*parse("(ab)^w b (ab)^w", ab), *parse("(ab)^w (ab)^w", ab), ab,
               opts));
  CHECK(!equal(*parse("b^w a (ab)^w", ab), *parse("b^w (ab)^w", ab), ab, opts));
  // An idempotent run absorbs into an ω-power starting with it.
  CHECK(equal(*parse("a^w (a^w b)^w", ab), *parse("(a^w b)^w", ab), ab, opts));
}

TEST_CASE("cross-check accepts inflated pairs and never throws") {
  Alphabet ab("ab");
  KClassEngine eng{ab};
  EqualOptions opts;
  opts.engine = &eng;
  std::mt19937 rng(99);
  int equal_pairs = 0;
  for (int i = 0; i < 200; ++i) {
    TermPtr t = testsupport::random_term(rng, ab, 2, 6);
    TermPtr inflated = testsupport::inflate(rng, t);
    if (i % 2 == 0) inflated = testsupport::inflate(rng, inflated);
    CAPTURE(print(t));
    CAPTURE(print(inflated));
    bool same = equal(*t, *inflated, ab, opts);  // throws on inconsistency
    CHECK(same);
    equal_pairs += same;
  }
  CHECK(equal_pairs == 200);
}

TEST_CASE("random distinct pairs have separating witnesses or are logged") {
  Alphabet ab("ab");
  KClassEngine eng{ab};
  EqualOptions opts;
  opts.engine = &eng;
  std::mt19937 rng(123);
  int distinct = 0, witnessed = 0, unresolved = 0;
  for (int i = 0; i < 300; ++i) {
    TermPtr t1 = testsupport::random_term(rng, ab, 2, 6);
    TermPtr t2 = testsupport::random_term(rng, ab, 2, 6);
    if (equal(*t1, *t2, ab, opts)) continue;
    ++distinct;
    if (separate(*t1, *t2, 4, eng))
      ++witnessed;
    else
      ++unresolved;  // e.g. long finite powers that agree below depth 5
  }
  CHECK(distinct > 0);
  CHECK(witnessed > 0);
  CHECK(witnessed + unresolved == distinct);
}
