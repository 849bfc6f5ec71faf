#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "socle/numeric.hpp"

namespace socle {

// A set of primes J, defining the multiplicative set N(J) of positive
// integers with all prime factors in J, and the coefficient ring Z[J^-1].
// Four shapes: empty, all primes, a finite list, or all-but-a-finite-list.
// Membership and J-part extraction never enumerate J.
class JSet {
 public:
  enum class Mode { Empty, All, Finite, Cofinite };

  JSet() : mode_(Mode::Empty) {}

  static JSet none() { return JSet(); }
  static JSet all();
  static JSet of(std::vector<Int> primes);          // finite list
  static JSet all_except(std::vector<Int> primes);  // cofinite

  Mode mode() const { return mode_; }
  // Finite: the members. Cofinite: the excluded primes. Sorted, distinct.
  const std::vector<Int>& primes() const { return primes_; }

  bool contains(const Int& p) const;  // p must be prime

  // Textual forms: "none", "all", "2,3,7", "all-except:2,5"
  static JSet parse(std::string_view text);
  std::string str() const;

  bool operator==(const JSet&) const = default;

 private:
  JSet(Mode m, std::vector<Int> ps) : mode_(m), primes_(std::move(ps)) {}
  Mode mode_;
  std::vector<Int> primes_;
};

// Is every prime factor of n in J? Requires n >= 1; is_j_number(1, J) is
// true for every J.
bool is_j_number(const Int& n, const JSet& j);

// Split n >= 1 as n = j * c with j a J-number and c coprime to every
// prime of J. Returns (j, c).
std::pair<Int, Int> j_part(const Int& n, const JSet& j);

}  // namespace socle
