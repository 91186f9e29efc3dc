#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hklattice/lattice.hpp"

namespace hklattice {

/// Exact element x + y*sqrt(d) of a real quadratic extension of Q.
/// d is fixed non-square positive; mixing different d's throws.
struct QuadNum {
  Rat x;
  Rat y;
  Int d;

  QuadNum() : x(0), y(0), d(0) {}
  QuadNum(Rat x_, Rat y_, Int d_) : x(std::move(x_)), y(std::move(y_)), d(std::move(d_)) {}
  static QuadNum rational(Rat v, Int d_) { return QuadNum(std::move(v), Rat(0), std::move(d_)); }

  bool is_zero() const { return x == 0 && y == 0; }
  QuadNum conj() const { return QuadNum(x, -y, d); }
  double to_double() const;
  std::string str() const;

  bool operator==(const QuadNum&) const = default;
};

QuadNum operator+(const QuadNum& a, const QuadNum& b);
QuadNum operator-(const QuadNum& a, const QuadNum& b);
QuadNum operator-(const QuadNum& a);
QuadNum operator*(const QuadNum& a, const QuadNum& b);
QuadNum operator/(const QuadNum& a, const QuadNum& b);

using QuadVec = std::vector<QuadNum>;

enum class SpectralKind { elliptic, parabolic, hyperbolic };

/// Spectral classification of psi restricted to span(h1, h2): hyperbolic
/// (a^2 > 4) with lambda = (t + sqrt(t^2 - 4))/2 for t = a^2 - 2 stored
/// exactly, parabolic (a^2 = 4), or elliptic (a^2 < 4) of finite order.
struct SpectralClass {
  SpectralKind kind;
  Int trace;       // a^2 - 2
  Int disc = 0;    // trace^2 - 4, hyperbolic only
  int order = 0;   // elliptic only
};

/// psi = R_{h1} o R_{h2} for two independent square-2 classes; restricted to
/// the plane span(h1, h2) the matrix in basis (h1, h2) is
/// [[a^2-1, a], [-a, -1]] with a = (h1, h2).
struct PsiIsometry {
  Lattice ambient;
  LatticeVector h1;
  LatticeVector h2;
  Isometry matrix;
  Int a;
  Int trace_on_plane;
};

PsiIsometry build_psi(const Lattice& l, const LatticeVector& h1, const LatticeVector& h2);

SpectralClass classify(const PsiIsometry& psi);

/// Exact isotropic eigenvectors e_+/- = h1 + x_+/- h2 in ambient coordinates
/// over Q(sqrt(a^2-4)): (e,e) = 0 and psi(e_+/-) = lambda^{+/-1} e_+/- exactly.
/// Throws NotHyperbolic unless a^2 > 4.
std::pair<QuadVec, QuadVec> isotropic_eigenvectors(const PsiIsometry& psi);

/// lambda as an exact quadratic number over Q(sqrt(a^2-4)).
QuadNum lambda_exact(const PsiIsometry& psi);

double lambda_float(const PsiIsometry& psi);

/// [x, psi x, ..., psi^k x], exact.
std::vector<LatticeVector> orbit(const PsiIsometry& psi, const LatticeVector& x, int k);

/// Saturated basis of ker(psi - id) over Z.
std::vector<LatticeVector> fixed_sublattice(const PsiIsometry& psi);

/// Apply psi to a vector with coordinates in Q(sqrt(d)).
QuadVec apply_quad(const PsiIsometry& psi, const QuadVec& v);

/// The form evaluated on Q(sqrt(d)) coordinate vectors.
QuadNum bilinear_quad(const Lattice& l, const QuadVec& u, const QuadVec& v);

}  // namespace hklattice
