#pragma once

#include <utility>
#include <vector>

#include "hklattice/lattice.hpp"

namespace hklattice {

/// The algebraic side of a K3: Neron-Severi Gram plus the distinguished
/// classes l = c_1(L) and an ample D. Rejects odd (l,l) on construction
/// (K3 NS lattices are even, and e^{-l} needs (l,l)/2 integral) and
/// requires (D,D) > 0.
struct K3AlgebraicData {
  Lattice ns;
  LatticeVector ell;
  LatticeVector ample;

  K3AlgebraicData(Lattice ns_, LatticeVector ell_, LatticeVector ample_);

  /// Every NS basis vector b has (b, D) divisible by (l, D).
  bool satisfies_picint() const;
  bool ell_dot_ample_positive() const;
};

/// r + l-part + s*eta in the algebraic Mukai lattice, basis (1, NS, eta)
/// with <1,eta> = -1, <1,1> = <eta,eta> = 0.
struct MukaiVector {
  Int r;
  Vec ell_part;
  Int s;

  bool operator==(const MukaiVector&) const = default;
  bool is_zero() const;
};

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b);
MukaiVector operator-(const MukaiVector& a, const MukaiVector& b);
MukaiVector operator-(const MukaiVector& a);
MukaiVector operator*(const Int& c, const MukaiVector& a);

/// A wall certificate against v-genericity: 0 < r0 < r, m = r*l0 - r0*l,
/// (m, D) = 0 and -(r^2<v,v> + 2r^4) <= 4(m,m) < 0.
struct WallWitness {
  Int r0;
  LatticeVector ell0;
  LatticeVector m;
  bool operator==(const WallWitness&) const = default;
};

/// The rank-(rho+2) Mukai Gram in basis (1, NS-basis, eta).
Lattice mukai_lattice(const K3AlgebraicData& k);

Vec mukai_coords(const MukaiVector& v);
MukaiVector mukai_from_coords(const Vec& c);

/// <u,w> = (l_u, l_w)_NS - r_u s_w - r_w s_u.
Int mukai_pairing(const K3AlgebraicData& k, const MukaiVector& u, const MukaiVector& w);

/// alpha^vee: negate the degree-2 part.
MukaiVector dual(const MukaiVector& u);

/// Truncated cohomology product:
/// (r, l, s)(r', l', s') = (rr', rl' + r'l, rs' + r's + (l, l')).
MukaiVector cup(const K3AlgebraicData& k, const MukaiVector& u, const MukaiVector& w);

/// e^{-l} = 1 - l + ((l,l)/2) eta for any NS class l of even square.
MukaiVector exp_neg_ell(const K3AlgebraicData& k, const LatticeVector& ell);

/// 2 + <v,v>; throws NegativeDim below zero.
Int moduli_dim(const K3AlgebraicData& k, const MukaiVector& v);

/// Wall check for the polarization D: true with no witnesses iff no pair
/// (r0, l0) satisfies the wall inequalities. Witnesses are exhaustive and
/// sorted. Requires v.r >= 2, (D,D) > 0 and NS signature (1, rho-1).
std::pair<bool, std::vector<WallWitness>> is_v_generic(const K3AlgebraicData& k,
                                                       const MukaiVector& v);

/// Saturated basis of {alpha : <alpha, v> = 0}.
std::vector<MukaiVector> v_perp_basis(const K3AlgebraicData& k, const MukaiVector& v);

/// Reflection in the span of (eta - 1): alpha -> -alpha + <alpha, eta-1>(eta-1).
MukaiVector reflection_eta_minus_one(const K3AlgebraicData& k, const MukaiVector& alpha);

MukaiVector eta_minus_one(const K3AlgebraicData& k);
MukaiVector one_plus_eta(const K3AlgebraicData& k);

/// T_beta(alpha) = alpha_0 beta - <e^{-l} cup alpha, 1+eta>(1+eta) - e^{-l} cup alpha.
/// beta must lie in span(1, l, eta) (its NS part a multiple of l).
MukaiVector T_beta(const K3AlgebraicData& k, const MukaiVector& beta,
                   const LatticeVector& ell, const MukaiVector& alpha);

/// Search |b_i| <= bound for beta = b0 + b2 l + b4 eta in v-perp making
/// T_beta an isometric involution of v-perp. Requires v = (2, l, 2) with l
/// primitive. Returns the unique solution; NoSolution / NotUnique otherwise.
/// bound <= 0 means the default 2g + 10.
MukaiVector solve_involution_beta(const K3AlgebraicData& k, const MukaiVector& v,
                                  Int bound = 0);

/// Coefficients (b0, b2, b4) of a vector known to lie in span(1, l, eta).
std::vector<Int> lambda_coefficients(const K3AlgebraicData& k, const MukaiVector& beta,
                                     const LatticeVector& ell);

/// h_v = eta - 1 viewed inside v-perp for symmetric v = (r, l, r);
/// certified of square 2. Throws NotSymmetricVector when v.r != v.s.
MukaiVector h_v(const K3AlgebraicData& k, const MukaiVector& v);

}  // namespace hklattice
