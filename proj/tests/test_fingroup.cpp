#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "socle/error.hpp"
#include "socle/fingroup.hpp"
#include "socle/report.hpp"
#include "support/catalog.hpp"

using namespace socle;

namespace {

std::string fx(const std::string& name) {
  return std::string(SOCLE_FIXTURES) + "/" + name;
}

FiniteGroup load_perm_group(const std::string& name) {
  return build_group(parse_perm(slurp(fx(name))));
}

const FiniteGroup& s3() {
  static const FiniteGroup g = load_perm_group("s3.perm");
  return g;
}

std::map<int, int> order_multiset(const FiniteGroup& g) {
  std::map<int, int> m;
  for (int a = 0; a < g.order(); ++a) ++m[g.element_order(a)];
  return m;
}

const cat::CatalogEntry& entry(const std::string& name) {
  for (const auto& e : cat::catalog())
    if (e.name == name) return e;
  REQUIRE(false);
  return cat::catalog().front();
}

}  // namespace

TEST_CASE("permutation primitives") {
  Perm p = parse_cycles("(1 2 3)", 4);  // 0->1->2->0, 3 fixed
  Perm q = parse_cycles("(3 4)", 4);
  // (p*q)(x) = p(q(x)): apply q first.
  Perm pq = perm_compose(p, q);
  CHECK(pq == parse_cycles("(1 2 3 4)", 4));
  CHECK(perm_compose(p, perm_inverse(p)) == perm_identity(4));
  CHECK(parse_cycles("()", 3) == perm_identity(3));
  CHECK(cycle_str(pq) == "(1 2 3 4)");
  CHECK(cycle_str(perm_identity(3)) == "()");
  CHECK(parse_cycles(cycle_str(q), 4) == q);
  CHECK_THROWS_AS(parse_cycles("(1 2", 4), Error);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 4), Error);  // not disjoint
  CHECK_THROWS_AS(parse_cycles("(0 1)", 4), Error);       // 1-based points
  CHECK_THROWS_AS(parse_cycles("(1 5)", 4), Error);
}

TEST_CASE("closure from permutations") {
  CHECK(s3().order() == 6);
  CHECK(s3().label(0) == "()");
  CHECK(load_perm_group("a5.perm").order() == 60);
  CHECK(load_perm_group("d4.perm").order() == 8);
  CHECK(load_perm_group("q8.perm").order() == 8);
}

TEST_CASE("closure respects the cap") {
  std::vector<Perm> gens = {parse_cycles("(1 2 3 4 5)", 5),
                            parse_cycles("(1 2 3)", 5)};
  CHECK_THROWS_AS(from_permutations(gens, 10), Error);
  try {
    from_permutations(gens, 10);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Cap);
  }
}

TEST_CASE("table validation catches corrupted tables") {
  const FiniteGroup& g = s3();
  std::vector<int> table(36), good;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) table[a * 6 + b] = g.mul(a, b);
  good = table;
  std::vector<std::string> labels;
  std::vector<int> gen_ids = g.gen_ids();
  for (int a = 0; a < 6; ++a) labels.push_back(g.label(a));

  CHECK_NOTHROW(FiniteGroup(good, labels, gen_ids));
  table[7] = (table[7] + 1) % 6;  // breaks associativity or inverses
  CHECK_THROWS(FiniteGroup(table, labels, gen_ids));
  CHECK_THROWS(FiniteGroup(good, labels, {}));  // nothing generates
}

TEST_CASE("element orders, powers, word evaluation") {
  const FiniteGroup& g = s3();
  int transposition = g.gen_ids()[0];
  int rotation = g.gen_ids()[1];
  CHECK(g.element_order(0) == 1);
  CHECK(g.element_order(transposition) == 2);
  CHECK(g.element_order(rotation) == 3);
  CHECK(g.power(rotation, 3) == 0);
  CHECK(g.power(rotation, -1) == g.inv(rotation));
  CHECK(g.power(rotation, Int("3000000000000000001")) == rotation);
  CHECK(g.evaluate(parse_word("g2^3")) == 0);
  CHECK(g.evaluate(parse_word("[g1, g2]")) ==
        g.mul(g.mul(transposition, rotation),
              g.mul(g.inv(transposition), g.inv(rotation))));
  CHECK_THROWS_AS(g.evaluate(parse_word("g3")), Error);
  CHECK_THROWS_AS(g.evaluate(parse_word("x")), Error);
}

TEST_CASE("subgroup closure and normality") {
  const FiniteGroup& g = s3();
  Subgroup rot = closure(g, {g.gen_ids()[1]});
  CHECK(rot.order() == 3);
  CHECK(rot.normal);
  Subgroup refl = closure(g, {g.gen_ids()[0]});
  CHECK(refl.order() == 2);
  CHECK_FALSE(refl.normal);
  CHECK(closure(g, {}).order() == 1);
  CHECK(whole_group(g).order() == 6);
  CHECK(trivial_subgroup().order() == 1);
}

TEST_CASE("commutator subgroups") {
  CHECK(commutator_subgroup(s3()).order() == 3);
  const FiniteGroup q8 = load_perm_group("q8.perm");
  Subgroup derived = commutator_subgroup(q8);
  CHECK(derived.order() == 2);
  CHECK(derived.normal);
  const FiniteGroup a5 = load_perm_group("a5.perm");
  CHECK(commutator_subgroup(a5).order() == 60);  // perfect
}

TEST_CASE("conjugacy classes") {
  auto classes = conjugacy_classes(s3());
  REQUIRE(classes.size() == 3);
  CHECK(classes[0] == std::vector<int>{0});
  std::multiset<std::size_t> sizes;
  for (const auto& c : classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
}

TEST_CASE("quotients") {
  const FiniteGroup& g = s3();
  QuotientResult q = quotient(g, commutator_subgroup(g));
  CHECK(q.group.order() == 2);
  CHECK(q.projection[0] == 0);
  // The projection is a homomorphism.
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(q.projection[g.mul(a, b)] ==
            q.group.mul(q.projection[a], q.projection[b]));
  CHECK_THROWS_AS(quotient(g, closure(g, {g.gen_ids()[0]})), Error);
}

TEST_CASE("subgroup reindexed as a group") {
  const FiniteGroup& g = s3();
  Subgroup rot = closure(g, {g.gen_ids()[1]});
  SubgroupAsGroup h = subgroup_as_group(g, rot);
  CHECK(h.group.order() == 3);
  for (int m : rot.members) CHECK(h.to_sub[m] >= 0);
  // Multiplication transported faithfully.
  for (int a : rot.members)
    for (int b : rot.members)
      CHECK(h.to_sub[g.mul(a, b)] ==
            h.group.mul(h.to_sub[a], h.to_sub[b]));
}

TEST_CASE("reference catalog: orders, abelianizations, element orders") {
  for (const auto& e : cat::catalog()) {
    CAPTURE(e.name);
    CHECK(e.group.order() == e.order);
    AbelianInvariants ab = abelianization(e.group);
    std::vector<Int> got = ab.torsion();
    CHECK(ab.free_rank() == 0);
    CHECK(got == e.ab);
    if (!e.element_orders.empty())
      CHECK(order_multiset(e.group) == e.element_orders);
  }
}

TEST_CASE("derived step relative to a prime set") {
  const FiniteGroup& g = s3();
  JSet j3 = JSet::parse("3"), j2 = JSet::parse("2");
  // The abelianization is pure 2-torsion, so it is entirely 2-local.
  CHECK(j_derived_step(g, whole_group(g), j2).order() == 6);
  // Its 3-torsion part is trivial: only the rotations map into it.
  CHECK(j_derived_step(g, whole_group(g), j3).order() == 3);
  CHECK(j_derived_step(g, trivial_subgroup(), j2).order() == 1);
}

TEST_CASE("radical fixpoints on pinned groups") {
  JSet none = JSet::parse("none"), j2 = JSet::parse("2"),
       j3 = JSet::parse("3");
  CHECK(gamma_radical(s3(), j3).order() == 3);
  CHECK(gamma_radical(s3(), j2).order() == 6);
  CHECK(gamma_radical(s3(), none).order() == 1);
  const FiniteGroup a5 = load_perm_group("a5.perm");
  CHECK(gamma_radical(a5, none).order() == 60);
  const FiniteGroup q8 = load_perm_group("q8.perm");
  CHECK(gamma_radical(q8, none).order() == 1);
  CHECK(j_derived_step(q8, whole_group(q8), none).order() == 2);
  const FiniteGroup a4 = entry("a4").group;
  CHECK(gamma_radical(a4, j3).order() == 12);
  CHECK(gamma_radical(a4, j2).order() == 4);
}

TEST_CASE("radical is idempotent and normal") {
  for (const char* name : {"s3", "a4", "q8", "d8", "sl23"}) {
    const FiniteGroup& g = entry(name).group;
    for (const JSet& j : cat::catalog_jsets()) {
      Subgroup r = gamma_radical(g, j);
      CHECK(r.normal);
      SubgroupAsGroup h = subgroup_as_group(g, r);
      Subgroup again = gamma_radical(h.group, j);
      CHECK(again.order() == r.order());
    }
  }
}

TEST_CASE("nullification kills the radical") {
  JSet none = JSet::parse("none");
  FiniteGroup n = nullification(s3(), JSet::parse("3"));
  CHECK(n.order() == 2);
  CHECK(gamma_radical(n, JSet::parse("3")).order() == 1);
  CHECK(nullification(load_perm_group("a5.perm"), none).order() == 1);
  CHECK(nullification(load_perm_group("q8.perm"), none).order() == 8);
}

TEST_CASE("exhaustive normal-subgroup oracle agrees on pinned groups") {
  JSet none = JSet::parse("none");
  CHECK(brute_force_radical(s3(), JSet::parse("3")) ==
        gamma_radical(s3(), JSet::parse("3")));
  CHECK(brute_force_radical(entry("s4").group, none).order() == 1);
  CHECK(brute_force_radical(entry("a5").group, none).order() == 60);
}

TEST_CASE("oracle guards") {
  // 2^10 points of order 2: order 1024 > 512.
  std::vector<Perm> gens;
  for (int i = 0; i < 10; ++i) {
    std::string c = "(" + std::to_string(2 * i + 1) + " " +
                    std::to_string(2 * i + 2) + ")";
    gens.push_back(parse_cycles(c, 20));
  }
  FiniteGroup big = from_permutations(gens);
  CHECK(big.order() == 1024);
  CHECK_THROWS_AS(brute_force_radical(big, JSet::parse("none")), Error);

  // 24 conjugacy classes in a cyclic group of order 24.
  FiniteGroup c24 =
      from_permutations({parse_cycles("(1 2 3 4 5 6 7 8)(9 10 11)", 11)});
  CHECK(c24.order() == 24);
  try {
    brute_force_radical(c24, JSet::parse("none"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Guard);
  }
}

TEST_CASE("permutation file format") {
  PermFile f = parse_perm(slurp(fx("s3.perm")));
  CHECK(f.points == 3);
  CHECK(f.gens.size() == 2);
  CHECK(f.cap == kDefaultGroupCap);
  PermFile g = parse_perm(print_perm(f));
  CHECK(f == g);
  CHECK(print_perm(f) == print_perm(g));

  CHECK_THROWS_AS(parse_perm("gen (1 2)\n"), Error);          // no points
  CHECK_THROWS_AS(parse_perm("points 3\npoints 3\n"), Error);
  CHECK_THROWS_AS(parse_perm("points 3\ngen (1 4)\n"), Error);
  CHECK_THROWS_AS(parse_perm("points 0\n"), Error);
}
