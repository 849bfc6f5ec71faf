#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "socle/abelian.hpp"
#include "socle/jset.hpp"
#include "socle/word.hpp"

namespace socle {

// Permutation of {0..n-1} as its image vector.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& p, const Perm& q);  // (p*q)(x) = p(q(x))
Perm perm_inverse(const Perm& p);
// Cycle notation on 1-based points: "(1 2 3)(4 5)", identity "()".
Perm parse_cycles(std::string_view text, int n);
std::string cycle_str(const Perm& p);

inline constexpr int kDefaultGroupCap = 5000;

// Finite group materialized as a full Cayley table. Element 0 is the
// identity. Labels are display-only; gen_ids index a generating set whose
// words use names g1..gk.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  // Verifies: identity at 0, two-sided inverses, gen_ids generate, and
  // associativity via Light's test over gen_ids (equivalent to the full
  // O(n^3) check once the generators generate).
  FiniteGroup(std::vector<int> table, std::vector<std::string> labels,
              std::vector<int> gen_ids);

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int element_order(int a) const;
  int power(int a, const Int& e) const;
  const std::vector<int>& gen_ids() const { return gen_ids_; }
  const std::string& label(int a) const { return labels_[a]; }

  // Evaluate a word whose generator names are g1..gk.
  int evaluate(const Word& w) const;

 private:
  int order_ = 0;
  std::vector<int> table_;
  std::vector<std::string> labels_;
  std::vector<int> gen_ids_;
  std::vector<int> inv_;
};

// Closure under the generating permutations, breadth-first layer by layer
// with lexicographic tie-break inside a layer; identity gets index 0.
// Exceeding cap throws Error(Cap). Labels are cycle strings.
FiniteGroup from_permutations(const std::vector<Perm>& gens,
                              int cap = kDefaultGroupCap);

// Subgroup of an ambient FiniteGroup: sorted member indices.
struct Subgroup {
  std::vector<int> members;
  bool normal = false;

  std::size_t order() const { return members.size(); }
  bool contains(int g) const;
  bool operator==(const Subgroup& o) const { return members == o.members; }
};

Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup();

// Subgroup generated by seed (indices into g).
Subgroup closure(const FiniteGroup& g, const std::vector<int>& seed);
bool is_normal(const FiniteGroup& g, const Subgroup& s);

// [N, N]: generated by commutators of pairs of members of n.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& n);
Subgroup commutator_subgroup(const FiniteGroup& g);  // [G, G]

// Classes in order of least member; members sorted; identity class first.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

struct QuotientResult {
  FiniteGroup group;
  std::vector<int> projection;  // parent index -> quotient index
};

// G/N for normal N. Cosets ordered by least member; labels "[rep]".
QuotientResult quotient(const FiniteGroup& g, const Subgroup& n);

// The subgroup n reindexed as a group of its own, plus parent->sub map
// (-1 outside n).
struct SubgroupAsGroup {
  FiniteGroup group;
  std::vector<int> to_sub;
};
SubgroupAsGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& n);

// Invariant factors of G/[G,G], extracted by repeatedly splitting off a
// maximal-order cyclic summand of the concrete quotient group.
AbelianInvariants abelianization(const FiniteGroup& g);

// One derived step relative to J: the preimage in n of the J-torsion part
// of n^ab. Requires n normal; result is normal in g.
Subgroup j_derived_step(const FiniteGroup& g, const Subgroup& n,
                        const JSet& j);

// Descending J-derived series from G until stable.
Subgroup gamma_radical(const FiniteGroup& g, const JSet& j);

// G / gamma_radical(G, J).
FiniteGroup nullification(const FiniteGroup& g, const JSet& j);

// Independent oracle: enumerate all normal subgroups (closures of unions
// of conjugacy classes), keep those with J-torsion abelianization, return
// the unique maximal one. Guards: |G| <= 512 and <= 20 classes. A
// non-unique maximal is a hard failure (logic_error).
Subgroup brute_force_radical(const FiniteGroup& g, const JSet& j);

// .perm: "points <n>", "gen <cycles>" lines, optional "cap <N>".
struct PermFile {
  int points = 0;
  std::vector<Perm> gens;
  int cap = kDefaultGroupCap;
  bool operator==(const PermFile&) const = default;
};
PermFile parse_perm(std::string_view text);
std::string print_perm(const PermFile& f);
FiniteGroup build_group(const PermFile& f);

}  // namespace socle
