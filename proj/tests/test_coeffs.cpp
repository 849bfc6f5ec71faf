#include <initializer_list>
#include <random>
#include <vector>

#include "doctest.h"
#include "socle/abelian.hpp"
#include "socle/error.hpp"
#include "socle/jset.hpp"
#include "socle/numeric.hpp"

using namespace socle;

namespace {

std::vector<Int> ints(std::initializer_list<int> xs) {
  std::vector<Int> v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("integer parsing is strict") {
  CHECK(parse_int("0") == 0);
  CHECK(parse_int("-17") == -17);
  CHECK(parse_int("123456789012345678901234567890") ==
        Int("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_int(""), Error);
  CHECK_THROWS_AS(parse_int("12x"), Error);
  CHECK_THROWS_AS(parse_int("- 5"), Error);
  CHECK_THROWS_AS(parse_int("+5"), Error);
}

TEST_CASE("primality by trial division") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(91));  // 7 * 13
}

TEST_CASE("prime set textual forms round-trip") {
  for (const char* s : {"none", "all", "2", "2,3,7", "all-except:2,5"}) {
    JSet j = JSet::parse(s);
    CHECK(j.str() == s);
    CHECK(JSet::parse(j.str()) == j);
  }
  CHECK(JSet::parse("7,3,3,2").str() == "2,3,7");
  CHECK(JSet::parse("all-except:5,2").str() == "all-except:2,5");
}

TEST_CASE("prime set parse rejects junk") {
  CHECK_THROWS_AS(JSet::parse(""), Error);
  CHECK_THROWS_AS(JSet::parse("4"), Error);
  CHECK_THROWS_AS(JSet::parse("2,,3"), Error);
  CHECK_THROWS_AS(JSet::parse("all-except:"), Error);
  CHECK_THROWS_AS(JSet::parse("all-except:6"), Error);
  CHECK_THROWS_AS(JSet::parse("-3"), Error);
}

TEST_CASE("membership in the four shapes") {
  JSet none = JSet::parse("none"), all = JSet::parse("all");
  JSet fin = JSet::parse("2,7"), cof = JSet::parse("all-except:2,7");
  for (int p : {2, 3, 5, 7, 11}) {
    CHECK_FALSE(none.contains(p));
    CHECK(all.contains(p));
    CHECK(fin.contains(p) == (p == 2 || p == 7));
    CHECK(cof.contains(p) == (p != 2 && p != 7));
  }
}

TEST_CASE("J-part splits n into invertible and surviving factors") {
  JSet j23 = JSet::parse("2,3");
  auto [a, b] = j_part(Int(720), j23);  // 2^4 * 3^2 * 5
  CHECK(a == 144);
  CHECK(b == 5);

  JSet cof = JSet::parse("all-except:2,5");
  auto [c, d] = j_part(Int(720), cof);
  CHECK(c == 9);
  CHECK(d == 80);

  CHECK(j_part(Int(1), j23) == std::pair<Int, Int>(1, 1));
  CHECK(j_part(Int(7), JSet::parse("none")) == std::pair<Int, Int>(1, 7));
  CHECK(j_part(Int(7), JSet::parse("all")) == std::pair<Int, Int>(7, 1));
  CHECK_THROWS_AS(j_part(Int(0), j23), Error);
  CHECK_THROWS_AS(is_j_number(Int(-2), j23), Error);
}

TEST_CASE("J-number predicate") {
  JSet j2 = JSet::parse("2");
  CHECK(is_j_number(Int(1), JSet::parse("none")));
  CHECK(is_j_number(Int(64), j2));
  CHECK_FALSE(is_j_number(Int(12), j2));
  CHECK(is_j_number(Int(12), JSet::parse("2,3")));
  CHECK(is_j_number(Int(12), JSet::parse("all")));
  CHECK(is_j_number(Int(35), JSet::parse("all-except:2,3")));
  CHECK_FALSE(is_j_number(Int(6), JSet::parse("all-except:2")));
}

TEST_CASE("J-part is multiplicative split: random check") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(1, 1000000);
  JSet sets[] = {JSet::parse("none"), JSet::parse("2"), JSet::parse("2,3"),
                 JSet::parse("all-except:2,5"), JSet::parse("all")};
  for (int t = 0; t < 300; ++t) {
    Int n(pick(rng));
    for (const JSet& j : sets) {
      auto [a, b] = j_part(n, j);
      CHECK(a * b == n);
      CHECK(is_j_number(a, j));
      // b shares no prime with J: its J-part must be 1.
      CHECK(j_part(b, j).first == 1);
    }
  }
}

TEST_CASE("normalize_chain produces a divisibility chain with equal product") {
  CHECK(normalize_chain(ints({4, 2, 4})) == ints({2, 4, 4}));
  CHECK(normalize_chain(ints({6, 4})) == ints({2, 12}));
  CHECK(normalize_chain(ints({1, 1, 1})) == ints({}));
  CHECK(normalize_chain(ints({})) == ints({}));
  CHECK(normalize_chain(ints({12, 18})) == ints({6, 36}));
  CHECK_THROWS_AS(normalize_chain(ints({0, 2})), Error);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(0, 6), val(1, 60);
  for (int t = 0; t < 200; ++t) {
    std::vector<Int> in;
    Int prod = 1;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      in.emplace_back(val(rng));
      prod *= in.back();
    }
    std::vector<Int> out = normalize_chain(in);
    Int oprod = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
      CHECK(out[i] >= 2);
      if (i) CHECK(out[i] % out[i - 1] == 0);
      oprod *= out[i];
    }
    CHECK(oprod == prod);
    CHECK(normalize_chain(out) == out);  // idempotent
  }
}

TEST_CASE("invariant rendering") {
  CHECK(AbelianInvariants().str() == "0");
  CHECK(AbelianInvariants::from_factors(ints({4, 4})).str() == "4,4");
  CHECK(AbelianInvariants::from_factors(ints({4}), 2).str() == "4,Z,Z");
  CHECK(AbelianInvariants::from_factors(ints({}), 1).str() == "Z");
  CHECK(AbelianInvariants::from_factors(ints({1, 1})).str() == "0");
  CHECK(AbelianInvariants::from_factors(ints({6, 4})).str() == "2,12");
  CHECK(AbelianInvariants::from_factors(ints({8})).torsion_order() == 8);
  CHECK_THROWS_AS(AbelianInvariants::from_factors(ints({}), -1), Error);
}

TEST_CASE("localization keeps the non-J torsion and the free part") {
  auto a = AbelianInvariants::from_factors(ints({4, 12}), 1);
  CHECK(localize(a, JSet::parse("none")) == a);
  CHECK(localize(a, JSet::parse("2")).str() == "3,Z");
  CHECK(localize(a, JSet::parse("3")).str() == "4,4,Z");
  CHECK(localize(a, JSet::parse("all")).str() == "Z");
  CHECK(is_trivial_after_localization(
      AbelianInvariants::from_factors(ints({4, 4})), JSet::parse("2")));
  CHECK_FALSE(is_trivial_after_localization(a, JSet::parse("all")));
}
