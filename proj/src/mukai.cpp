#include "hklattice/mukai.hpp"

#include <algorithm>

#include "hklattice/errors.hpp"

namespace hklattice {

K3AlgebraicData::K3AlgebraicData(Lattice ns_, LatticeVector ell_, LatticeVector ample_)
    : ns(std::move(ns_)), ell(std::move(ell_)), ample(std::move(ample_)) {
  if (ell.size() != ns.rank || ample.size() != ns.rank)
    throw DimensionMismatch("ell/ample length does not match NS rank");
  if (bilinear(ns, ell, ell) % 2 != 0)
    throw OddSquare("(ell, ell) must be even on a K3 NS lattice");
  if (bilinear(ns, ample, ample) <= 0)
    throw AmpleNotPositive("(ample, ample) must be positive");
}

bool K3AlgebraicData::satisfies_picint() const {
  Int ld = bilinear(ns, ell, ample);
  if (ld == 0) return false;
  for (std::size_t i = 0; i < ns.rank; ++i) {
    Vec b(ns.rank, 0);
    b[i] = 1;
    if (bilinear(ns, b, ample) % ld != 0) return false;
  }
  return true;
}

bool K3AlgebraicData::ell_dot_ample_positive() const {
  return bilinear(ns, ell, ample) > 0;
}

bool MukaiVector::is_zero() const {
  if (r != 0 || s != 0) return false;
  for (const auto& c : ell_part)
    if (c != 0) return false;
  return true;
}

static void check_ell_len(const MukaiVector& a, const MukaiVector& b) {
  if (a.ell_part.size() != b.ell_part.size())
    throw DimensionMismatch("Mukai vectors over different NS lattices");
}

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
  check_ell_len(a, b);
  MukaiVector c{a.r + b.r, a.ell_part, a.s + b.s};
  for (std::size_t i = 0; i < c.ell_part.size(); ++i) c.ell_part[i] += b.ell_part[i];
  return c;
}

MukaiVector operator-(const MukaiVector& a, const MukaiVector& b) { return a + (-b); }

MukaiVector operator-(const MukaiVector& a) { return Int(-1) * a; }

MukaiVector operator*(const Int& c, const MukaiVector& a) {
  MukaiVector b{c * a.r, a.ell_part, c * a.s};
  for (auto& x : b.ell_part) x *= c;
  return b;
}

Lattice mukai_lattice(const K3AlgebraicData& k) {
  std::size_t rho = k.ns.rank;
  Mat g(rho + 2, Vec(rho + 2, 0));
  g[0][rho + 1] = -1;
  g[rho + 1][0] = -1;
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < rho; ++j) g[1 + i][1 + j] = k.ns.gram[i][j];
  return Lattice(std::move(g));
}

Vec mukai_coords(const MukaiVector& v) {
  Vec c;
  c.reserve(v.ell_part.size() + 2);
  c.push_back(v.r);
  c.insert(c.end(), v.ell_part.begin(), v.ell_part.end());
  c.push_back(v.s);
  return c;
}

MukaiVector mukai_from_coords(const Vec& c) {
  if (c.size() < 2) throw DimensionMismatch("Mukai coordinates need rank >= 2");
  return MukaiVector{c.front(), Vec(c.begin() + 1, c.end() - 1), c.back()};
}

Int mukai_pairing(const K3AlgebraicData& k, const MukaiVector& u, const MukaiVector& w) {
  if (u.ell_part.size() != k.ns.rank || w.ell_part.size() != k.ns.rank)
    throw DimensionMismatch("Mukai vector NS part does not match NS rank");
  return bilinear(k.ns, u.ell_part, w.ell_part) - u.r * w.s - w.r * u.s;
}

MukaiVector dual(const MukaiVector& u) {
  MukaiVector d{u.r, u.ell_part, u.s};
  for (auto& c : d.ell_part) c = -c;
  return d;
}

MukaiVector cup(const K3AlgebraicData& k, const MukaiVector& u, const MukaiVector& w) {
  if (u.ell_part.size() != k.ns.rank || w.ell_part.size() != k.ns.rank)
    throw DimensionMismatch("Mukai vector NS part does not match NS rank");
  MukaiVector p{u.r * w.r, Vec(k.ns.rank, 0),
                u.r * w.s + w.r * u.s + bilinear(k.ns, u.ell_part, w.ell_part)};
  for (std::size_t i = 0; i < k.ns.rank; ++i)
    p.ell_part[i] = u.r * w.ell_part[i] + w.r * u.ell_part[i];
  return p;
}

MukaiVector exp_neg_ell(const K3AlgebraicData& k, const LatticeVector& ell) {
  Int sq = bilinear(k.ns, ell, ell);
  if (sq % 2 != 0) throw OddSquare("e^{-ell} needs (ell, ell) even");
  MukaiVector e{1, ell, sq / 2};
  for (auto& c : e.ell_part) c = -c;
  return e;
}

Int moduli_dim(const K3AlgebraicData& k, const MukaiVector& v) {
  Int d = 2 + mukai_pairing(k, v, v);
  if (d < 0) throw NegativeDim("<v,v> < -2: empty moduli space");
  return d;
}

std::pair<bool, std::vector<WallWitness>> is_v_generic(const K3AlgebraicData& k,
                                                       const MukaiVector& v) {
  if (v.r < 2) throw BadArgument("v-genericity check needs rank component >= 2");
  if (bilinear(k.ns, k.ample, k.ample) <= 0)
    throw AmpleNotPositive("polarization has non-positive square");
  Signature sig = signature(k.ns);
  if (sig.positive != 1 || sig.null != 0)
    throw WrongSignature("NS lattice must have signature (1, rho-1)");

  std::vector<WallWitness> walls;
  // Window: -(r^2 <v,v> + 2 r^4) <= 4 (m,m) < 0 with m = r l0 - r0 l in D-perp.
  Int b = v.r * v.r * mukai_pairing(k, v, v) + 2 * v.r * v.r * v.r * v.r;
  if (b > 0) {
    auto perp = orthogonal_complement(k.ns, {k.ample});
    if (!perp.empty()) {
      std::size_t rk = perp.size();
      Mat w = perp;  // rows are the D-perp basis in NS coordinates
      Mat restricted = mul(mul(w, k.ns.gram), transpose(w));
      Lattice sub(restricted);
      // 4(m,m) >= -b  <=>  (m,m) >= ceil(-b/4) = -floor(b/4)
      Int lower = -(b / 4);
      if (lower < 0) {
        for (const auto& y : enumerate_bounded_norm(sub, lower)) {
          Vec m(k.ns.rank, 0);
          for (std::size_t i = 0; i < rk; ++i)
            for (std::size_t j = 0; j < k.ns.rank; ++j) m[j] += y[i] * w[i][j];
          for (Int r0 = 1; r0 < v.r; ++r0) {
            Vec num(k.ns.rank);
            bool integral = true;
            for (std::size_t j = 0; j < k.ns.rank; ++j) {
              num[j] = m[j] + r0 * k.ell[j];
              if (num[j] % v.r != 0) { integral = false; break; }
            }
            if (!integral) continue;
            for (auto& c : num) c /= v.r;
            walls.push_back(WallWitness{r0, std::move(num), m});
          }
        }
      }
    }
  }
  std::sort(walls.begin(), walls.end(), [](const WallWitness& a, const WallWitness& b2) {
    if (a.r0 != b2.r0) return a.r0 < b2.r0;
    return a.ell0 < b2.ell0;
  });
  return {walls.empty(), walls};
}

std::vector<MukaiVector> v_perp_basis(const K3AlgebraicData& k, const MukaiVector& v) {
  if (v.is_zero()) throw ZeroVector("v-perp of the zero vector");
  Lattice big = mukai_lattice(k);
  auto rows = orthogonal_complement(big, {mukai_coords(v)});
  std::vector<MukaiVector> basis;
  basis.reserve(rows.size());
  for (const auto& r : rows) basis.push_back(mukai_from_coords(r));
  return basis;
}

MukaiVector eta_minus_one(const K3AlgebraicData& k) {
  return MukaiVector{-1, Vec(k.ns.rank, 0), 1};
}

MukaiVector one_plus_eta(const K3AlgebraicData& k) {
  return MukaiVector{1, Vec(k.ns.rank, 0), 1};
}

MukaiVector reflection_eta_minus_one(const K3AlgebraicData& k, const MukaiVector& alpha) {
  MukaiVector h = eta_minus_one(k);
  return -alpha + (mukai_pairing(k, alpha, h) * h);
}

std::vector<Int> lambda_coefficients(const K3AlgebraicData& k, const MukaiVector& beta,
                                     const LatticeVector& ell) {
  // beta = b0 + b2*ell + b4*eta; the NS part must be an exact multiple of ell.
  Int b2 = 0;
  bool ell_zero = true;
  for (std::size_t i = 0; i < k.ns.rank; ++i)
    if (ell[i] != 0) {
      ell_zero = false;
      if (beta.ell_part[i] % ell[i] != 0)
        throw BetaNotInLambda("beta NS part is not a multiple of ell");
      b2 = beta.ell_part[i] / ell[i];
      break;
    }
  if (ell_zero) {
    for (const auto& c : beta.ell_part)
      if (c != 0) throw BetaNotInLambda("beta NS part nonzero but ell = 0");
  } else {
    for (std::size_t i = 0; i < k.ns.rank; ++i)
      if (beta.ell_part[i] != b2 * ell[i])
        throw BetaNotInLambda("beta NS part is not a multiple of ell");
  }
  return {beta.r, b2, beta.s};
}

MukaiVector T_beta(const K3AlgebraicData& k, const MukaiVector& beta,
                   const LatticeVector& ell, const MukaiVector& alpha) {
  lambda_coefficients(k, beta, ell);  // validates beta in span(1, ell, eta)
  MukaiVector e = exp_neg_ell(k, ell);
  MukaiVector ea = cup(k, e, alpha);
  MukaiVector u = one_plus_eta(k);
  return (alpha.r * beta) - (mukai_pairing(k, ea, u) * u) - ea;
}

MukaiVector solve_involution_beta(const K3AlgebraicData& k, const MukaiVector& v,
                                  Int bound) {
  if (v.r != 2 || v.s != 2)
    throw BadArgument("involution solver expects v = (2, ell, 2)");
  Int content = 0;
  for (const auto& c : v.ell_part) content = gcd(content, c);
  if (content != 1) throw BadArgument("ell must be primitive");
  const LatticeVector& ell = v.ell_part;
  Int lsq = bilinear(k.ns, ell, ell);
  Int g = (lsq + 2) / 2;
  if (bound <= 0) bound = 2 * g + 10;

  auto basis = v_perp_basis(k, v);
  std::vector<MukaiVector> solutions;
  // <beta, v> = 0 pins b0 = (b2 (l,l) - 2 b4)/2, so the box scan is 2-dimensional.
  for (Int b2 = -bound; b2 <= bound; ++b2) {
    for (Int b4 = -bound; b4 <= bound; ++b4) {
      Int twice_b0 = b2 * lsq - 2 * b4;
      if (twice_b0 % 2 != 0) continue;
      Int b0 = twice_b0 / 2;
      if (b0 < -bound || b0 > bound) continue;
      MukaiVector beta{b0, ell, b4};
      for (auto& c : beta.ell_part) c *= b2;
      bool ok = true;
      std::vector<MukaiVector> images;
      images.reserve(basis.size());
      for (const auto& a : basis) {
        MukaiVector ta = T_beta(k, beta, ell, a);
        if (mukai_pairing(k, ta, v) != 0 || !(T_beta(k, beta, ell, ta) == a)) {
          ok = false;
          break;
        }
        images.push_back(std::move(ta));
      }
      if (!ok) continue;
      for (std::size_t i = 0; i < basis.size() && ok; ++i)
        for (std::size_t j = i; j < basis.size() && ok; ++j)
          if (mukai_pairing(k, images[i], images[j]) !=
              mukai_pairing(k, basis[i], basis[j]))
            ok = false;
      if (ok) solutions.push_back(std::move(beta));
    }
  }
  if (solutions.empty())
    throw NoSolution("no isometric involution in the box |b_i| <= " + to_string(bound) +
                     "; retry with a larger bound");
  if (solutions.size() > 1)
    throw NotUnique("multiple involution solutions found; implementation bug");
  return solutions.front();
}

MukaiVector h_v(const K3AlgebraicData& k, const MukaiVector& v) {
  if (v.r != v.s)
    throw NotSymmetricVector("h_v is defined for symmetric v = (r, ell, r)");
  MukaiVector h = eta_minus_one(k);
  if (mukai_pairing(k, h, v) != 0 || mukai_pairing(k, h, h) != 2)
    throw PreconditionError("Internal", "h_v certification failed");
  return h;
}

}  // namespace hklattice
