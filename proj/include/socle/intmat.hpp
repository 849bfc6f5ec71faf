#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "socle/abelian.hpp"
#include "socle/numeric.hpp"

namespace socle {

// Dense integer matrix, row-major. Any dimension may be zero.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }
  Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);

struct SnfResult {
  // Full diagonal, length min(rows, cols): nonnegative, the nonzero
  // entries form a divisibility chain and precede the zeros.
  std::vector<Int> d;
  // u * m * v = diag(d); both unimodular. Empty when not requested.
  IntMatrix u, v;
  bool with_transforms = false;

  std::size_t rank() const;
  std::vector<Int> nonzero_factors() const;
};

// Pivot rule: nonzero entry of minimal absolute value, ties broken by
// lowest row then lowest column.
SnfResult smith_normal_form(const IntMatrix& m, bool with_transforms = true);

// Independent route to the nonzero invariant factors: d_k = g_k / g_{k-1}
// where g_k = gcd of all k x k minors. Guarded: min(rows, cols) <= 7.
std::vector<Int> gcd_minors(const IntMatrix& m);

// Z^rows / column span of m.
AbelianInvariants cokernel(const IntMatrix& m);

// cols - rank.
std::size_t kernel_rank(const IntMatrix& m);

// Rank over Q by fraction-free (Bareiss) elimination; oracle for rank().
std::size_t rank_fraction_free(const IntMatrix& m);

// Exact determinant (square), Bareiss.
Int det(const IntMatrix& m);

// Text format: first line "rows cols", then row-major entries, blanks and
// '#' comments ignored.
IntMatrix parse_matrix(std::string_view text);
std::string print_matrix(const IntMatrix& m);

}  // namespace socle
