#pragma once

#include <string>
#include <vector>

#include "socle/jset.hpp"
#include "socle/numeric.hpp"

namespace socle {

// Finitely generated abelian group up to isomorphism: a torsion part in
// invariant-factor form (each entry >= 2, each dividing the next) plus a
// free rank.
class AbelianInvariants {
 public:
  AbelianInvariants() = default;  // trivial group

  // Normalizes: drops 1s, reorders into a divisibility chain.
  static AbelianInvariants from_factors(std::vector<Int> factors,
                                        int free_rank = 0);

  const std::vector<Int>& torsion() const { return torsion_; }
  int free_rank() const { return free_rank_; }
  bool trivial() const { return torsion_.empty() && free_rank_ == 0; }
  bool finite() const { return free_rank_ == 0; }
  Int torsion_order() const;

  // "0" trivial; otherwise torsion entries then "Z" per free summand,
  // comma-separated: "4,4", "8", "4,Z,Z", "Z".
  std::string str() const;

  bool operator==(const AbelianInvariants&) const = default;

 private:
  std::vector<Int> torsion_;
  int free_rank_ = 0;
};

// Rewrite arbitrary factors (>= 1, 1s ignored) into a divisibility chain
// with the same product, by pairwise (gcd, lcm) smoothing. No factoring.
std::vector<Int> normalize_chain(std::vector<Int> factors);

// Tensor with Z[J^-1]: each torsion factor keeps only its non-J part;
// the free part is unchanged (rank counted over the coefficient ring).
AbelianInvariants localize(const AbelianInvariants& a, const JSet& j);

bool is_trivial_after_localization(const AbelianInvariants& a, const JSet& j);

}  // namespace socle
