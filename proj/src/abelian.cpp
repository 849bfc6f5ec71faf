#include "socle/abelian.hpp"

#include <algorithm>
#include <cassert>

#include "socle/error.hpp"

namespace socle {

std::vector<Int> normalize_chain(std::vector<Int> factors) {
  std::vector<Int> v;
  for (Int& f : factors) {
    if (f < 1) fail(ErrorCode::Parse, "invariant factor must be >= 1");
    if (f > 1) v.push_back(std::move(f));
  }
  // (a, b) -> (gcd, lcm) sorts the p-valuations of every prime at once;
  // repeated full passes terminate with a divisibility chain.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t k = i + 1; k < v.size(); ++k) {
        if (v[k] % v[i] == 0) continue;
        Int g = gcd(v[i], v[k]);
        Int l = (v[i] / g) * v[k];
        v[i] = g;
        v[k] = l;
        changed = true;
      }
    std::erase(v, Int(1));
  }
  std::sort(v.begin(), v.end());
  return v;
}

AbelianInvariants AbelianInvariants::from_factors(std::vector<Int> factors,
                                                  int free_rank) {
  if (free_rank < 0) fail(ErrorCode::Parse, "negative free rank");
  AbelianInvariants a;
  a.torsion_ = normalize_chain(std::move(factors));
  a.free_rank_ = free_rank;
  return a;
}

Int AbelianInvariants::torsion_order() const {
  Int n = 1;
  for (const Int& d : torsion_) n *= d;
  return n;
}

std::string AbelianInvariants::str() const {
  if (trivial()) return "0";
  std::string s;
  for (const Int& d : torsion_) {
    if (!s.empty()) s += ',';
    s += to_string(d);
  }
  for (int i = 0; i < free_rank_; ++i) {
    if (!s.empty()) s += ',';
    s += 'Z';
  }
  return s;
}

AbelianInvariants localize(const AbelianInvariants& a, const JSet& j) {
  std::vector<Int> kept;
  for (const Int& d : a.torsion()) {
    Int c = j_part(d, j).second;  // non-J part survives inverting J
    if (c > 1) kept.push_back(std::move(c));
  }
  return AbelianInvariants::from_factors(std::move(kept), a.free_rank());
}

bool is_trivial_after_localization(const AbelianInvariants& a, const JSet& j) {
  return localize(a, j).trivial();
}

}  // namespace socle
