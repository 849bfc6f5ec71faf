#include "socle/intmat.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "socle/error.hpp"

namespace socle {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::Parse, "matrix shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::size_t SnfResult::rank() const {
  std::size_t r = 0;
  for (const Int& x : d)
    if (x != 0) ++r;
  return r;
}

std::vector<Int> SnfResult::nonzero_factors() const {
  std::vector<Int> out;
  for (const Int& x : d)
    if (x != 0) out.push_back(x);
  return out;
}

namespace {

// Row/column eliminations tracked in u (left) and v (right) so that
// u * m * v stays equal to the working matrix.
struct SnfWork {
  IntMatrix a, u, v;
  bool track;

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(i, j), a(k, j));
    if (track)
      for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(i, j), u(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, j), a(i, k));
    if (track)
      for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, j), v(i, k));
  }
  // row_i -= q * row_k
  void add_row(std::size_t i, std::size_t k, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= q * a(k, j);
    if (track)
      for (std::size_t j = 0; j < u.cols(); ++j) u(i, j) -= q * u(k, j);
  }
  // col_j -= q * col_k
  void add_col(std::size_t j, std::size_t k, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, j) -= q * a(i, k);
    if (track)
      for (std::size_t i = 0; i < v.rows(); ++i) v(i, j) -= q * v(i, k);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = -a(i, j);
    if (track)
      for (std::size_t j = 0; j < u.cols(); ++j) u(i, j) = -u(i, j);
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m, bool with_transforms) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t steps = std::min(rows, cols);
  SnfWork w{m, IntMatrix(), IntMatrix(), with_transforms};
  if (with_transforms) {
    w.u = IntMatrix::identity(rows);
    w.v = IntMatrix::identity(cols);
  }

  for (std::size_t t = 0; t < steps; ++t) {
    bool keep_pivot = false;
    for (bool settled = false; !settled;) {
      // Pivot: minimal nonzero |entry| in the trailing block, ties by
      // lowest row then column. Re-selected every fresh pass — always
      // dividing by the block minimum is what keeps entry growth tame.
      // After a divisibility fold the pivot is kept: the fold plants a
      // non-divisible entry in row t, so the next row sweep is forced to
      // surface a strictly smaller remainder, which bounds the loop.
      if (!keep_pivot) {
        std::size_t pi = 0, pj = 0;
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
          for (std::size_t j = t; j < cols; ++j) {
            if (w.a(i, j) == 0) continue;
            Int mag = abs(w.a(i, j));
            if (!found || mag < best) {
              found = true;
              best = mag;
              pi = i;
              pj = j;
            }
          }
        if (!found) break;  // trailing block is zero; d_t.. stay 0
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
      }
      keep_pivot = false;

      // Clear column t completely; every surfaced remainder is a smaller
      // pivot, so this loop terminates.
      for (std::size_t i = t + 1; i < rows;) {
        if (w.a(i, t) == 0) {
          ++i;
          continue;
        }
        w.add_row(i, t, w.a(i, t) / w.a(t, t));
        if (w.a(i, t) != 0) {
          w.swap_rows(t, i);
          i = t + 1;  // smaller pivot; redo the column
        }
      }
      // Clear row t. The column below the pivot is zero now, so these
      // eliminations touch row t only — no growth elsewhere. A surviving
      // remainder swaps in a smaller pivot but dirties the column, so
      // start the pass over.
      bool restart = false;
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (w.a(t, j) == 0) continue;
        w.add_col(j, t, w.a(t, j) / w.a(t, t));
        if (w.a(t, j) != 0) {
          w.swap_cols(t, j);
          restart = true;
          break;
        }
      }
      if (restart) continue;

      // Divisibility: the pivot must divide the whole trailing block.
      settled = true;
      for (std::size_t i = t + 1; i < rows && settled; ++i)
        for (std::size_t j = t + 1; j < cols && settled; ++j)
          if (w.a(i, j) % w.a(t, t) != 0) {
            w.add_row(t, i, Int(-1));
            settled = false;
            keep_pivot = true;
          }
    }
    if (w.a(t, t) < 0) w.negate_row(t);
  }

  SnfResult res;
  res.d.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) res.d[t] = w.a(t, t);
  res.with_transforms = with_transforms;
  if (with_transforms) {
    res.u = std::move(w.u);
    res.v = std::move(w.v);
  }
  return res;
}

// Exact determinant by fraction-free elimination on a scratch copy.
static Int det_bareiss(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = num / prev;  // exact by Bareiss
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::Parse, "det needs a square matrix");
  return det_bareiss(m);
}

std::size_t rank_fraction_free(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && a(p, col) == 0) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(rank, j), a(p, j));
    for (std::size_t i = rank + 1; i < rows; ++i)
      for (std::size_t j = col + 1; j < cols; ++j)
        a(i, j) = (a(i, j) * a(rank, col) - a(i, col) * a(rank, j)) / prev;
    for (std::size_t i = rank + 1; i < rows; ++i) a(i, col) = 0;
    prev = a(rank, col);
    ++rank;
  }
  return rank;
}

std::vector<Int> gcd_minors(const IntMatrix& m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  if (n > 7) fail(ErrorCode::Guard, "gcd_minors guard: min dimension > 7");
  std::vector<Int> factors;
  Int prev_g = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    // gcd over all k x k minors.
    Int g = 0;
    std::vector<std::size_t> ri(k), ci(k);
    auto for_subsets = [&](std::size_t total, std::vector<std::size_t>& idx,
                           auto&& body) {
      for (std::size_t i = 0; i < k; ++i) idx[i] = i;
      while (true) {
        body();
        std::size_t i = k;
        while (i-- > 0) {
          if (idx[i] != i + total - k) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            break;
          }
          if (i == 0) return;
        }
      }
    };
    for_subsets(m.rows(), ri, [&] {
      for_subsets(m.cols(), ci, [&] {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(ri[i], ci[j]);
        g = gcd(g, det_bareiss(std::move(sub)));
      });
    });
    if (g == 0) break;  // rank reached
    factors.push_back(g / prev_g);
    prev_g = g;
  }
  return factors;
}

AbelianInvariants cokernel(const IntMatrix& m) {
  SnfResult s = smith_normal_form(m, /*with_transforms=*/false);
  std::vector<Int> torsion;
  for (const Int& x : s.d)
    if (x > 1) torsion.push_back(x);
  int free_rank = static_cast<int>(m.rows() - s.rank());
  return AbelianInvariants::from_factors(std::move(torsion), free_rank);
}

std::size_t kernel_rank(const IntMatrix& m) {
  return m.cols() - smith_normal_form(m, false).rank();
}

IntMatrix parse_matrix(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      if (i == text.size()) break;
    }
    cleaned += text[i];
  }
  std::istringstream in(cleaned);
  long long rows = -1, cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0)
    fail(ErrorCode::Parse, "matrix header must be 'rows cols'");
  IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string tok;
      if (!(in >> tok)) fail(ErrorCode::Parse, "matrix: too few entries");
      m(i, j) = parse_int(tok);
    }
  std::string extra;
  if (in >> extra) fail(ErrorCode::Parse, "matrix: trailing data");
  return m;
}

std::string print_matrix(const IntMatrix& m) {
  std::string s = std::to_string(m.rows()) + " " + std::to_string(m.cols());
  s += '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ' ';
      s += to_string(m(i, j));
    }
    s += '\n';
  }
  return s;
}

}  // namespace socle
