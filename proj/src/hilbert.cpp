#include "hklattice/hilbert.hpp"

#include <algorithm>

#include "hklattice/errors.hpp"

namespace hklattice {

HilbertClass::HilbertClass(Lattice ns_, Vec mu, Int xi, int n_)
    : ns(std::move(ns_)), mu_part(std::move(mu)), xi_coeff(std::move(xi)), n(n_) {
  if (mu_part.size() != ns.rank)
    throw DimensionMismatch("mu part length does not match NS rank");
  if (n < 2) throw BadArgument("Hilbert scheme classes need n >= 2");
}

Int bb_form(const HilbertClass& a, const HilbertClass& b) {
  if (a.n != b.n || !(a.ns == b.ns))
    throw DimensionMismatch("BB pairing of classes on different Hilbert schemes");
  return bilinear(a.ns, a.mu_part, b.mu_part) - 2 * (a.n - 1) * a.xi_coeff * b.xi_coeff;
}

FujikiData fujiki_constant(int n) {
  if (n < 1) throw BadArgument("Fujiki constant needs n >= 1");
  Rat c(factorial(2 * static_cast<unsigned>(n)),
        factorial(static_cast<unsigned>(n)) * boost::multiprecision::pow(Int(2), n));
  return FujikiData{n, c};
}

Int fujiki_top_power(int n, const Int& square) {
  FujikiData f = fujiki_constant(n);
  Rat v = f.c * Rat(boost::multiprecision::pow(square, n));
  return boost::multiprecision::numerator(v);  // c is integral, so v is too
}

Int fujiki_top_power(const HilbertClass& a) {
  return fujiki_top_power(a.n, bb_form(a, a));
}

std::vector<HilbertClass> degree2_classes(const Lattice& ns, int n, const Int& box) {
  if (box < 0) throw BadArgument("box must be non-negative");
  if (n < 2) throw BadArgument("degree-2 search needs n >= 2");
  std::vector<HilbertClass> found;
  std::size_t rho = ns.rank;
  Vec coords(rho + 1, -box);  // (m..., t)
  long limit = enumeration_limit();
  long visited = 0;
  while (true) {
    Vec m(coords.begin(), coords.begin() + rho);
    const Int& t = coords[rho];
    // canonical sign: first nonzero coordinate positive
    bool canonical = true;
    for (const auto& c : coords) {
      if (c == 0) continue;
      canonical = c > 0;
      break;
    }
    if (canonical) {
      if (++visited > limit)
        throw EnumerationLimit("degree-2 search exceeded the enumeration cap");
      Int square = bilinear(ns, m, m) - 2 * (n - 1) * t * t;
      if (square == 2) found.emplace_back(ns, m, t, n);
    }
    std::size_t i = 0;
    while (i <= rho && coords[i] == box) coords[i++] = -box;
    if (i > rho) break;
    ++coords[i];
  }
  std::sort(found.begin(), found.end(), [](const HilbertClass& a, const HilbertClass& b) {
    if (a.mu_part != b.mu_part) return a.mu_part < b.mu_part;
    return a.xi_coeff < b.xi_coeff;
  });
  return found;
}

Int rr_chi(int n, const Int& square) {
  if (n < 0) throw BadArgument("rr_chi needs n >= 0");
  if (square % 2 != 0) throw OddSquare("rr_chi needs an even square");
  return binomial(square / 2 + n + 1, static_cast<unsigned>(n));
}

Int dim_quadrics(const Int& g) {
  if (g < 3) throw BadArgument("dim_quadrics needs g >= 3");
  return (g - 2) * (g - 3) / 2 - 1;
}

StrangeDualityDims strange_duality_dims(const K3AlgebraicData& k, const MukaiVector& v0,
                                        const MukaiVector& v1) {
  Int d0 = moduli_dim(k, v0);
  Int d1 = moduli_dim(k, v1);
  if (d0 % 2 != 0 || d1 % 2 != 0)
    throw BadArgument("moduli dimensions must be even");  // Mukai lattice is even
  StrangeDualityDims r;
  r.orthogonal = mukai_pairing(k, v0, dual(v1)) == 0;
  r.n0 = d0 / 2;
  r.n1 = d1 / 2;
  r.chi0 = binomial(r.n0 + r.n1, static_cast<unsigned>(r.n0));
  r.chi1 = binomial(r.n0 + r.n1, static_cast<unsigned>(r.n1));
  r.equal = r.chi0 == r.chi1;
  return r;
}

HilbertClass theta_w_coords(const K3AlgebraicData& k, const MukaiVector& x,
                            SignConvention sign) {
  if (x.r != x.s)
    throw NotInWPerp("theta_w needs <x, 1-eta> = 0, i.e. x = (a, m, a)");
  // (a, m, a) = (0, m, 0) + a (1, 0, 1) and theta_w((1,0,1)) = xi_2.
  Vec mu = x.ell_part;
  Int xi = x.r;
  if (sign == SignConvention::opposite) {
    for (auto& c : mu) c = -c;
    xi = -xi;
  }
  return HilbertClass(k.ns, std::move(mu), std::move(xi), 2);
}

}  // namespace hklattice
