#pragma once

#include <vector>

#include "hklattice/numeric.hpp"

namespace hklattice {

// Dense exact integer matrices, row-major. Sizes here are tiny (rank <= ~25),
// so plain vector-of-rows beats anything cleverer.
using Mat = std::vector<Vec>;

Mat identity(std::size_t n);
Mat transpose(const Mat& a);
Mat mul(const Mat& a, const Mat& b);
Vec mul_vec(const Mat& a, const Vec& x);
bool is_square(const Mat& a);
bool is_symmetric(const Mat& a);

/// Determinant by fraction-free (Bareiss) elimination. det of the 0x0 matrix is 1.
Int det(const Mat& a);

/// Basis of {x in Z^n : A x = 0}, one vector per row. The kernel of an
/// integer matrix is a direct summand, so the result spans a saturated
/// (primitive) sublattice. Rows are in row-Hermite normal form.
Mat kernel_basis(const Mat& a);

/// Row-style Hermite normal form: echelon rows with positive pivots and
/// entries above each pivot reduced into [0, pivot). Canonical for the row
/// lattice; zero rows are dropped.
Mat hnf_rows(Mat a);

/// Diagonal of the Smith normal form (non-negative, divisibility chain,
/// padded with zeros up to min(rows, cols)).
std::vector<Int> smith_diagonal(Mat a);

}  // namespace hklattice
