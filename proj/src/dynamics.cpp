#include "hklattice/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "hklattice/errors.hpp"

namespace hklattice {

static void check_same_field(const QuadNum& a, const QuadNum& b) {
  if (a.d != b.d && !a.is_zero() && !b.is_zero())
    throw BadArgument("mixing quadratic numbers over different fields");
}

QuadNum operator+(const QuadNum& a, const QuadNum& b) {
  check_same_field(a, b);
  return QuadNum(a.x + b.x, a.y + b.y, a.d != 0 ? a.d : b.d);
}

QuadNum operator-(const QuadNum& a, const QuadNum& b) { return a + (-b); }

QuadNum operator-(const QuadNum& a) { return QuadNum(-a.x, -a.y, a.d); }

QuadNum operator*(const QuadNum& a, const QuadNum& b) {
  check_same_field(a, b);
  Int d = a.d != 0 ? a.d : b.d;
  return QuadNum(a.x * b.x + Rat(d) * a.y * b.y, a.x * b.y + a.y * b.x, d);
}

QuadNum operator/(const QuadNum& a, const QuadNum& b) {
  check_same_field(a, b);
  // 1/(x + y sqrt d) = (x - y sqrt d) / (x^2 - d y^2)
  Rat norm = b.x * b.x - Rat(b.d) * b.y * b.y;
  if (norm == 0) throw BadArgument("division by zero quadratic number");
  QuadNum num = a * b.conj();
  return QuadNum(num.x / norm, num.y / norm, num.d);
}

double QuadNum::to_double() const {
  return x.convert_to<double>() +
         y.convert_to<double>() * std::sqrt(d.convert_to<double>());
}

std::string QuadNum::str() const {
  return "(" + to_string(x) + " + " + to_string(y) + "*sqrt(" + d.str() + "))";
}

PsiIsometry build_psi(const Lattice& l, const LatticeVector& h1, const LatticeVector& h2) {
  if (bilinear(l, h1, h1) != 2 || bilinear(l, h2, h2) != 2)
    throw SquareNotTwo("both reflection classes must have square 2");
  Mat rows{h1, h2};
  if (hnf_rows(rows).size() != 2)
    throw NotIndependent("h1 and h2 must be linearly independent");
  Isometry psi = compose(reflection_square2(l, h1), reflection_square2(l, h2));
  Int a = bilinear(l, h1, h2);
  return PsiIsometry{l, h1, h2, std::move(psi), a, a * a - 2};
}

SpectralClass classify(const PsiIsometry& psi) {
  Int asq = psi.a * psi.a;
  SpectralClass s;
  s.trace = psi.trace_on_plane;
  if (asq > 4) {
    s.kind = SpectralKind::hyperbolic;
    s.disc = s.trace * s.trace - 4;
  } else if (asq == 4) {
    s.kind = SpectralKind::parabolic;
  } else {
    s.kind = SpectralKind::elliptic;
    // trace -2 (a = 0) is -id on the plane; trace -1 (a = +-1) has
    // eigenvalues the primitive cube roots of unity.
    s.order = (psi.a == 0) ? 2 : 3;
  }
  return s;
}

QuadNum lambda_exact(const PsiIsometry& psi) {
  if (psi.a * psi.a <= 4) throw NotHyperbolic("lambda > 1 needs a^2 > 4");
  Int d = psi.a * psi.a - 4;
  // lambda = ((a^2-2) + sqrt((a^2-2)^2 - 4))/2 = (a^2-2)/2 + (|a|/2) sqrt(a^2-4)
  Int abs_a = psi.a < 0 ? -psi.a : psi.a;
  return QuadNum(Rat(psi.trace_on_plane, 2), Rat(abs_a, 2), d);
}

double lambda_float(const PsiIsometry& psi) { return lambda_exact(psi).to_double(); }

QuadVec apply_quad(const PsiIsometry& psi, const QuadVec& v) {
  const Mat& m = psi.matrix.matrix;
  QuadVec out(m.size());
  Int d = 0;
  for (const auto& c : v)
    if (c.d != 0) d = c.d;
  for (std::size_t i = 0; i < m.size(); ++i) {
    QuadNum s = QuadNum::rational(Rat(0), d);
    for (std::size_t j = 0; j < v.size(); ++j)
      s = s + QuadNum::rational(Rat(m[i][j]), d) * v[j];
    out[i] = s;
  }
  return out;
}

QuadNum bilinear_quad(const Lattice& l, const QuadVec& u, const QuadVec& v) {
  if (u.size() != l.rank || v.size() != l.rank)
    throw DimensionMismatch("quadratic-field vector length mismatch");
  Int d = 0;
  for (const auto& c : u)
    if (c.d != 0) d = c.d;
  QuadNum s = QuadNum::rational(Rat(0), d);
  for (std::size_t i = 0; i < l.rank; ++i)
    for (std::size_t j = 0; j < l.rank; ++j)
      s = s + u[i] * QuadNum::rational(Rat(l.gram[i][j]), d) * v[j];
  return s;
}

std::pair<QuadVec, QuadVec> isotropic_eigenvectors(const PsiIsometry& psi) {
  if (psi.a * psi.a <= 4) throw NotHyperbolic("isotropic eigenvectors need a^2 > 4");
  Int d = psi.a * psi.a - 4;
  // (h1 + x h2, h1 + x h2) = 2 + 2ax + 2x^2 = 0  <=>  x = (-a +- sqrt(a^2-4))/2
  QuadNum xp(Rat(-psi.a, 2), Rat(1, 2), d);
  QuadNum xm(Rat(-psi.a, 2), Rat(-1, 2), d);
  auto embed = [&](const QuadNum& x) {
    QuadVec e(psi.ambient.rank);
    for (std::size_t i = 0; i < psi.ambient.rank; ++i)
      e[i] = QuadNum::rational(Rat(psi.h1[i]), d) + QuadNum::rational(Rat(psi.h2[i]), d) * x;
    return e;
  };
  QuadVec ep = embed(xp), em = embed(xm);
  // e_+ is the lambda-eigenvector: its eigenvalue is a^2 - 1 + a*x.
  QuadNum lam = lambda_exact(psi);
  QuadNum eig_p = QuadNum::rational(Rat(psi.a * psi.a - 1), d) +
                  QuadNum::rational(Rat(psi.a), d) * xp;
  if (!(eig_p == lam)) std::swap(ep, em);
  return {ep, em};
}

std::vector<LatticeVector> orbit(const PsiIsometry& psi, const LatticeVector& x, int k) {
  if (k < 0) throw BadArgument("orbit length must be non-negative");
  std::vector<LatticeVector> o;
  o.reserve(static_cast<std::size_t>(k) + 1);
  o.push_back(x);
  for (int i = 0; i < k; ++i) o.push_back(psi.matrix.apply(o.back()));
  return o;
}

std::vector<LatticeVector> fixed_sublattice(const PsiIsometry& psi) {
  std::size_t n = psi.ambient.rank;
  Mat m = psi.matrix.matrix;
  for (std::size_t i = 0; i < n; ++i) m[i][i] -= 1;
  Mat basis = kernel_basis(m);
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace hklattice
