#pragma once

#include <vector>

#include "hklattice/lattice.hpp"
#include "hklattice/mukai.hpp"

namespace hklattice {

/// A class mu(m) + t*xi_n on the length-n Hilbert scheme of a K3, with the
/// Beauville-Bogomolov square (m,m) - 2(n-1) t^2.
struct HilbertClass {
  Lattice ns;
  Vec mu_part;
  Int xi_coeff;
  int n = 2;

  HilbertClass(Lattice ns_, Vec mu, Int xi, int n_);
  bool operator==(const HilbertClass&) const = default;
};

struct FujikiData {
  int n;
  Rat c;  // (2n)! / (n! 2^n), an integer for every n >= 1
};

/// Which global sign of theta identifies v-perp with H^2 of the moduli
/// space. `paper` fixes theta_w((0,m,0)) = mu(m), theta_w((1,0,1)) = xi_2;
/// `opposite` is the global negation.
enum class SignConvention { paper, opposite };

Int bb_form(const HilbertClass& a, const HilbertClass& b);

FujikiData fujiki_constant(int n);

/// c_X * (a,a)^n, the model value of the top self-intersection.
Int fujiki_top_power(const HilbertClass& a);
Int fujiki_top_power(int n, const Int& square);

/// All classes mu(m) + t*xi_n with coordinates in [-box, box] and BB square
/// exactly 2, deduplicated up to global sign (first nonzero coordinate of
/// (m..., t) positive) and sorted.
std::vector<HilbertClass> degree2_classes(const Lattice& ns, int n, const Int& box);

/// Riemann-Roch count binom(square/2 + n + 1, n) for a square-`square`
/// line bundle on a 2n-dimensional deformation of Hilb^n. square even, n >= 0.
Int rr_chi(int n, const Int& square);

/// d(g) = (g-2)(g-3)/2 - 1, the dimension of the quadric system through a
/// genus-g K3; g >= 3.
Int dim_quadrics(const Int& g);

struct StrangeDualityDims {
  bool orthogonal;
  Int n0;
  Int n1;
  Int chi0;
  Int chi1;
  bool equal;
};

/// The dimension identity behind strange duality: n_i = dim M(v_i)/2,
/// chi_i = binom(n0 + n1, n_i), with chi0 = chi1 by binomial symmetry.
/// `orthogonal` reports <v0, v1^vee> = 0 (a flag, not a failure).
StrangeDualityDims strange_duality_dims(const K3AlgebraicData& k, const MukaiVector& v0,
                                        const MukaiVector& v1);

/// Chart of w-perp (w = 1 - eta) as H^2 of Hilb^2: x = (a, m, a) maps to
/// mu(m) + a*xi_2, an isometry onto the BB lattice. Throws NotInWPerp
/// unless x.r = x.s.
HilbertClass theta_w_coords(const K3AlgebraicData& k, const MukaiVector& x,
                            SignConvention sign = SignConvention::paper);

}  // namespace hklattice
