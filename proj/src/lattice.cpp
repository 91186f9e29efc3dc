#include "hklattice/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "hklattice/errors.hpp"

namespace hklattice {

Lattice::Lattice(Mat g) : rank(g.size()), gram(std::move(g)) {
  for (const auto& row : gram)
    if (row.size() != rank) throw DimensionMismatch("gram matrix is not square");
  if (!is_symmetric(gram)) throw NotSymmetric("gram matrix is not symmetric");
}

static void check_length(const Lattice& l, const LatticeVector& v) {
  if (v.size() != l.rank)
    throw DimensionMismatch("vector length " + std::to_string(v.size()) +
                            " does not match lattice rank " + std::to_string(l.rank));
}

Int bilinear(const Lattice& l, const LatticeVector& u, const LatticeVector& v) {
  check_length(l, u);
  check_length(l, v);
  Int s = 0;
  for (std::size_t i = 0; i < l.rank; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < l.rank; ++j) s += u[i] * l.gram[i][j] * v[j];
  }
  return s;
}

Signature signature(const Lattice& l) {
  std::size_t n = l.rank;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(l.gram[i][j]);

  auto swap_sym = [&](std::size_t a, std::size_t b) {
    std::swap(m[a], m[b]);
    for (std::size_t i = 0; i < n; ++i) std::swap(m[i][a], m[i][b]);
  };
  // Symmetric congruence e_a += e_b (row and column together).
  auto add_sym = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) m[a][j] += m[b][j];
    for (std::size_t i = 0; i < n; ++i) m[i][a] += m[i][b];
  };

  Signature sig;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] == 0) {
      std::size_t k = i + 1;
      while (k < n && m[k][k] == 0) ++k;
      if (k < n) {
        swap_sym(i, k);
      } else {
        // All remaining diagonal entries vanish. A nonzero pair (p,q) spans a
        // hyperbolic-type block; e_p += e_q turns its diagonal on.
        std::size_t p = n, q = n;
        for (std::size_t a = i; a < n && p == n; ++a)
          for (std::size_t b = a + 1; b < n; ++b)
            if (m[a][b] != 0) { p = a; q = b; break; }
        if (p == n) {
          sig.null += static_cast<int>(n - i);
          break;
        }
        add_sym(p, q);
        if (p != i) swap_sym(i, p);
      }
    }
    Rat d = m[i][i];
    if (d > 0) ++sig.positive; else ++sig.negative;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m[j][i] == 0) continue;
      Rat f = m[j][i] / d;
      for (std::size_t k = 0; k < n; ++k) m[j][k] -= f * m[i][k];
      for (std::size_t k = 0; k < n; ++k) m[k][j] -= f * m[k][i];
    }
  }
  return sig;
}

Isometry::Isometry(Lattice l, Mat m) : lattice(std::move(l)), matrix(std::move(m)) {
  if (matrix.size() != lattice.rank)
    throw DimensionMismatch("isometry matrix rank mismatch");
  for (const auto& row : matrix)
    if (row.size() != lattice.rank)
      throw DimensionMismatch("isometry matrix is not square");
  Mat mt = transpose(matrix);
  if (mul(mul(mt, lattice.gram), matrix) != lattice.gram)
    throw NotIsometry("matrix does not preserve the form");
  Int d = det(matrix);
  if (d != 1 && d != -1) throw NotIsometry("isometry determinant is not +-1");
}

LatticeVector Isometry::apply(const LatticeVector& v) const {
  check_length(lattice, v);
  return mul_vec(matrix, v);
}

Isometry reflection_square2(const Lattice& l, const LatticeVector& h) {
  check_length(l, h);
  if (bilinear(l, h, h) != 2)
    throw SquareNotTwo("reflection requires (h,h) = 2, got " +
                       to_string(bilinear(l, h, h)));
  Vec gh = mul_vec(l.gram, h);
  Mat m(l.rank, Vec(l.rank, 0));
  for (std::size_t i = 0; i < l.rank; ++i)
    for (std::size_t j = 0; j < l.rank; ++j)
      m[i][j] = (i == j ? Int(-1) : Int(0)) + h[i] * gh[j];
  return Isometry(l, std::move(m));
}

Isometry compose(const Isometry& f, const Isometry& g) {
  if (!(f.lattice == g.lattice))
    throw DimensionMismatch("composing isometries of different lattices");
  return Isometry(f.lattice, mul(f.matrix, g.matrix));
}

Isometry identity_isometry(const Lattice& l) {
  return Isometry(l, identity(l.rank));
}

std::vector<LatticeVector> orthogonal_complement(const Lattice& l,
                                                 const std::vector<LatticeVector>& vs) {
  Mat pairing;
  for (const auto& v : vs) {
    check_length(l, v);
    pairing.push_back(mul_vec(l.gram, v));
  }
  Mat basis = pairing.empty() ? identity(l.rank) : kernel_basis(pairing);
  std::sort(basis.begin(), basis.end());
  return basis;
}

long enumeration_limit() {
  if (const char* e = std::getenv("HKLATTICE_MAX_ENUM")) {
    long v = std::atol(e);
    if (v > 0) return v;
  }
  return 1000000L;
}

namespace {

// floor(alpha + sqrt(rho)) for exact rational alpha, rho >= 0.
Int floor_add_sqrt(const Rat& alpha, const Rat& rho) {
  Int k = floor_rat(alpha) + isqrt(floor_rat(rho));
  auto le = [&](const Int& x) {  // x <= alpha + sqrt(rho)
    Rat d = Rat(x) - alpha;
    return d <= 0 || d * d <= rho;
  };
  while (le(k + 1)) ++k;
  while (!le(k)) --k;
  return k;
}

Int ceil_sub_sqrt(const Rat& alpha, const Rat& rho) {
  return -floor_add_sqrt(-alpha, rho);
}

}  // namespace

std::vector<LatticeVector> enumerate_bounded_norm(const Lattice& l, const Int& lower,
                                                  long max_count) {
  if (signature(l) != Signature{0, static_cast<int>(l.rank), 0})
    throw NotNegativeDefinite("enumeration requires a negative definite lattice");
  std::vector<LatticeVector> out;
  if (lower >= 0 || l.rank == 0) return out;  // the window [lower, 0) is empty
  if (max_count < 0) max_count = enumeration_limit();

  std::size_t n = l.rank;
  // LDL^T of the positive definite form Q = -G:
  // Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2.
  std::vector<std::vector<Rat>> q(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = Rat(-l.gram[i][j]);
  std::vector<Rat> d(n);
  std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    Rat di = q[i][i];
    for (std::size_t k = 0; k < i; ++k) di -= d[k] * mu[k][i] * mu[k][i];
    d[i] = di;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat v = q[i][j];
      for (std::size_t k = 0; k < i; ++k) v -= d[k] * mu[k][i] * mu[k][j];
      mu[i][j] = v / di;
    }
  }

  const Rat budget = Rat(-lower);  // enumerate Q(x) <= -lower
  Vec x(n, 0);
  long count = 0;

  // Backtrack from the last coordinate; at each level the admissible range of
  // x_i is an exact integer interval around the projected center.
  auto descend = [&](auto&& self, std::size_t level, const Rat& remaining) -> void {
    std::size_t i = level - 1;
    Rat c(0);
    for (std::size_t j = i + 1; j < n; ++j)
      if (x[j] != 0) c += mu[i][j] * x[j];
    Rat rho = remaining / d[i];
    Int lo = ceil_sub_sqrt(-c, rho);
    Int hi = floor_add_sqrt(-c, rho);
    for (Int t = lo; t <= hi; ++t) {
      x[i] = t;
      Rat term = d[i] * (Rat(t) + c) * (Rat(t) + c);
      if (i == 0) {
        bool zero = true;
        for (const auto& xi : x)
          if (xi != 0) { zero = false; break; }
        if (zero) continue;
        if (++count > max_count)
          throw EnumerationLimit("enumeration exceeded cap of " +
                                 std::to_string(max_count) + " vectors");
        out.push_back(x);
      } else {
        self(self, i, remaining - term);
      }
    }
    x[i] = 0;
  };
  descend(descend, n, budget);

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hklattice
