#include "hklattice/intlinalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "hklattice/errors.hpp"

namespace hklattice {

Mat identity(std::size_t n) {
  Mat m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat transpose(const Mat& a) {
  std::size_t r = a.size(), c = r ? a[0].size() : 0;
  Mat t(c, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) t[j][i] = a[i][j];
  return t;
}

Mat mul(const Mat& a, const Mat& b) {
  std::size_t r = a.size();
  std::size_t k = r ? a[0].size() : 0;
  if (k != b.size()) throw DimensionMismatch("matrix product shape mismatch");
  std::size_t c = b.empty() ? 0 : b[0].size();
  Mat p(r, Vec(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t m = 0; m < k; ++m) {
      if (a[i][m] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) p[i][j] += a[i][m] * b[m][j];
    }
  return p;
}

Vec mul_vec(const Mat& a, const Vec& x) {
  std::size_t r = a.size();
  if (r && a[0].size() != x.size())
    throw DimensionMismatch("matrix-vector shape mismatch");
  Vec y(r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

bool is_square(const Mat& a) {
  for (const auto& row : a)
    if (row.size() != a.size()) return false;
  return true;
}

bool is_symmetric(const Mat& a) {
  if (!is_square(a)) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i][j] != a[j][i]) return false;
  return true;
}

Int det(const Mat& a) {
  if (!is_square(a)) throw DimensionMismatch("determinant of non-square matrix");
  std::size_t n = a.size();
  if (n == 0) return 1;
  Mat m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

namespace {

// Column elimination A -> A*U by unimodular U, tracking U. After processing
// all rows, columns of U whose image column vanished span ker(A).
struct ColumnReducer {
  Mat m;  // working copy of A
  Mat u;  // n x n transformation, columns tracked alongside m's columns
  std::size_t rows, cols;

  explicit ColumnReducer(const Mat& a)
      : m(a), u(identity(a.empty() ? 0 : a[0].size())),
        rows(a.size()), cols(a.empty() ? 0 : a[0].size()) {}

  void add_col(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < rows; ++i) m[i][dst] += q * m[i][src];
    for (std::size_t i = 0; i < cols; ++i) u[i][dst] += q * u[i][src];
  }
  void swap_col(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(u[i][a], u[i][b]);
  }
};

}  // namespace

Mat kernel_basis(const Mat& a) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  if (a.empty()) {
    // Kernel of the empty map is everything.
    return identity(cols);
  }
  ColumnReducer red(a);
  std::size_t lead = 0;  // first column not yet fixed as a pivot
  for (std::size_t r = 0; r < red.rows && lead < cols; ++r) {
    // Euclid on row r among columns >= lead until at most one entry survives.
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = lead; j < cols; ++j) {
        if (red.m[r][j] == 0) continue;
        if (best == cols ||
            abs(red.m[r][j]) < abs(red.m[r][best]))
          best = j;
      }
      if (best == cols) break;  // row r is zero on the free columns
      bool others = false;
      for (std::size_t j = lead; j < cols; ++j) {
        if (j == best || red.m[r][j] == 0) continue;
        Int q = red.m[r][j] / red.m[r][best];
        red.add_col(j, best, -q);
        if (red.m[r][j] != 0) others = true;
      }
      if (!others) {
        red.swap_col(lead, best);
        ++lead;
        break;
      }
    }
  }
  Mat basis;
  for (std::size_t j = lead; j < cols; ++j) {
    Vec v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = red.u[i][j];
    basis.push_back(std::move(v));
  }
  return hnf_rows(std::move(basis));
}

Mat hnf_rows(Mat a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t pr = 0;  // pivot row
  for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
    // Make a single positive pivot in column pc using rows >= pr.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = pr; i < rows; ++i) {
        if (a[i][pc] == 0) continue;
        if (best == rows || abs(a[i][pc]) < abs(a[best][pc])) best = i;
      }
      if (best == rows) break;
      bool others = false;
      for (std::size_t i = pr; i < rows; ++i) {
        if (i == best || a[i][pc] == 0) continue;
        Int q = a[i][pc] / a[best][pc];
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[best][j];
        if (a[i][pc] != 0) others = true;
      }
      if (!others) {
        std::swap(a[pr], a[best]);
        break;
      }
    }
    if (pr < rows && a[pr][pc] != 0) {
      if (a[pr][pc] < 0)
        for (std::size_t j = 0; j < cols; ++j) a[pr][j] = -a[pr][j];
      // Reduce the entries above the pivot into [0, pivot).
      for (std::size_t i = 0; i < pr; ++i) {
        Int q = a[i][pc] / a[pr][pc];
        if (a[i][pc] - q * a[pr][pc] < 0) q -= 1;
        if (q == 0) continue;
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[pr][j];
      }
      ++pr;
    }
  }
  a.resize(pr);
  return a;
}

std::vector<Int> smith_diagonal(Mat a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t n = std::min(rows, cols);
  std::vector<Int> d(n, 0);
  std::size_t t = 0;
  while (t < n) {
    // Locate a minimal nonzero entry in the trailing block.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        if (pi == rows || abs(a[i][j]) < abs(a[pi][pj])) { pi = i; pj = j; }
      }
    if (pi == rows) break;  // trailing block is zero
    std::swap(a[t], a[pi]);
    for (std::size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      Int q = a[i][t] / a[t][t];
      if (q != 0)
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      Int q = a[t][j] / a[t][t];
      if (q != 0)
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; repeat at the same t
    // Enforce divisibility of the remaining block by the pivot.
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols && divides; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
          divides = false;
        }
    if (!divides) continue;
    d[t] = abs(a[t][t]);
    ++t;
  }
  return d;
}

}  // namespace hklattice
