#include <random>
#include <vector>

#include "doctest.h"
#include "socle/error.hpp"
#include "socle/word.hpp"

using namespace socle;

namespace {

Word w(const char* text) { return parse_word(text); }

// Random reduced word over x, y, z with small exponents.
Word random_word(std::mt19937& rng) {
  static const Gen gens[] = {Gen("x"), Gen("y"), Gen("z")};
  std::uniform_int_distribution<int> len(0, 8), pick(0, 2), exp(-3, 3);
  std::vector<Syllable> raw;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int e = exp(rng);
    if (e == 0) continue;
    raw.push_back({gens[pick(rng)], Int(e)});
  }
  return Word::from(std::move(raw));
}

}  // namespace

TEST_CASE("generator names") {
  CHECK(Gen("x").name() == "x");
  CHECK(Gen("x(2.1.4)").name() == "x(2.1.4)");
  CHECK(Gen("2/x").name() == "2/x");
  CHECK(Gen("a_b-c.d").name() == "a_b-c.d");
  CHECK_THROWS_AS(Gen(""), Error);
  CHECK_THROWS_AS(Gen("(x)"), Error);     // may not start with '('
  CHECK_THROWS_AS(Gen("x("), Error);      // unbalanced
  CHECK_THROWS_AS(Gen("x y"), Error);     // space
  CHECK_THROWS_AS(Gen("x[1]"), Error);    // bad character
}

TEST_CASE("construction reduces") {
  Gen x("x"), y("y");
  Word u = Word::from({{x, 2}, {x, 3}});
  CHECK(u == Word::gen(x, 5));
  Word v = Word::from({{x, 1}, {y, 1}, {y, -1}, {x, -1}, {x, 2}});
  CHECK(v == Word::gen(x, 2));
  CHECK(Word::from({{x, 1}, {x, -1}}).empty());
  CHECK(Word().empty());
  CHECK(Word::gen(x, 0).empty());
}

TEST_CASE("parsing and printing") {
  CHECK(print_word(w("x^2 y^-1")) == "x^2 y^-1");
  CHECK(print_word(w("x x")) == "x^2");
  CHECK(print_word(w("x y y^-1 x^-1")) == "()");
  CHECK(print_word(w("()")) == "()");
  CHECK(print_word(w("[x,y]")) == "x y x^-1 y^-1");
  CHECK(print_word(w("[x^2,y]^-1")) == "y x^2 y^-1 x^-2");
  CHECK(print_word(w("(x y)^2")) == "x y x y");
  CHECK(print_word(w("x(1.2)^4 x(1.1)")) == "x(1.2)^4 x(1.1)");
  CHECK(w("x^1") == Word::gen(Gen("x")));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(w("x^"), Error);
  CHECK_THROWS_AS(w("x^y"), Error);
  CHECK_THROWS_AS(w("(x y"), Error);
  CHECK_THROWS_AS(w("[x y]"), Error);
  CHECK_THROWS_AS(w("[x,y"), Error);
  CHECK_THROWS_AS(w("^2"), Error);
}

TEST_CASE("print-parse identity on random words") {
  std::mt19937 rng(23);
  for (int t = 0; t < 300; ++t) {
    Word u = random_word(rng);
    CHECK(parse_word(print_word(u)) == u);
  }
}

TEST_CASE("group identities on random words") {
  std::mt19937 rng(29);
  for (int t = 0; t < 200; ++t) {
    Word u = random_word(rng), v = random_word(rng), c = random_word(rng);
    CHECK(invert(invert(u)) == u);
    CHECK(concat(u, invert(u)).empty());
    CHECK(invert(concat(u, v)) == concat(invert(v), invert(u)));
    CHECK(pow(u, 3) == concat(u, concat(u, u)));
    CHECK(pow(u, -2) == invert(pow(u, 2)));
    CHECK(pow(u, 0).empty());
    CHECK(conjugate(conjugate(u, c), invert(c)) == u);
    CHECK(commutator(u, v) == invert(commutator(v, u)));
  }
}

TEST_CASE("commutator convention is u v u^-1 v^-1") {
  Word c = commutator(Word::gen(Gen("x")), Word::gen(Gen("y")));
  CHECK(print_word(c) == "x y x^-1 y^-1");
}

TEST_CASE("exponent sums") {
  Word u = w("x^3 y x^-1 z^2 x");
  CHECK(exponent_sum(u, Gen("x")) == 3);
  CHECK(exponent_sum(u, Gen("y")) == 1);
  CHECK(exponent_sum(u, Gen("z")) == 2);
  CHECK(exponent_sum(u, Gen("q")) == 0);
  std::mt19937 rng(31);
  for (int t = 0; t < 100; ++t) {
    Word a = random_word(rng), b = random_word(rng);
    CHECK(exponent_sum(concat(a, b), Gen("y")) ==
          exponent_sum(a, Gen("y")) + exponent_sum(b, Gen("y")));
  }
}

TEST_CASE("powers of single syllables stay in syllable form") {
  Word big = pow(Word::gen(Gen("x")), Int("1000000000000000000000"));
  CHECK(big.syllables().size() == 1);
  CHECK(big.length() == Int("1000000000000000000000"));
}

TEST_CASE("pathological multi-syllable powers are capped") {
  Word base = w("x y");
  CHECK_THROWS_AS(pow(base, Int(1) << 21), Error);
  try {
    pow(base, Int(1) << 21);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Cap);
  }
}
