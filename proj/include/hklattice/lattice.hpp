#pragma once

#include <cstddef>
#include <vector>

#include "hklattice/intlinalg.hpp"
#include "hklattice/numeric.hpp"

namespace hklattice {

/// A finite-rank free abelian group with an integral symmetric Gram matrix.
/// Nondegeneracy is not assumed; signature() reports null > 0 when present.
struct Lattice {
  std::size_t rank = 0;
  Mat gram;

  Lattice() = default;
  explicit Lattice(Mat g);

  bool operator==(const Lattice& o) const { return gram == o.gram; }
};

/// Coordinate vectors are plain arrays interpreted against an explicitly
/// passed lattice; no hidden ambient state.
using LatticeVector = Vec;

struct Signature {
  int positive = 0;
  int negative = 0;
  int null = 0;
  bool operator==(const Signature&) const = default;
};

/// An integral isometry, verified on construction: M^T G M = G, det = +-1.
struct Isometry {
  Lattice lattice;
  Mat matrix;

  Isometry(Lattice l, Mat m);

  LatticeVector apply(const LatticeVector& v) const;
};

Int bilinear(const Lattice& l, const LatticeVector& u, const LatticeVector& v);

/// Sylvester signature by exact rational congruence diagonalization
/// (basis-independent; no floating point anywhere).
Signature signature(const Lattice& l);

/// The reflection fixing h, v -> -v + (v,h)h. Integral and involutive
/// exactly because (h,h) = 2; anything else throws SquareNotTwo.
Isometry reflection_square2(const Lattice& l, const LatticeVector& h);

Isometry compose(const Isometry& f, const Isometry& g);

Isometry identity_isometry(const Lattice& l);

/// Basis of the saturated sublattice {x : (x, v_i) = 0 for all i}, via the
/// integer kernel of the pairing matrix. Rows sorted lexicographically.
std::vector<LatticeVector> orthogonal_complement(const Lattice& l,
                                                 const std::vector<LatticeVector>& vs);

/// All nonzero x with lower <= (x,x) < 0 in a negative definite lattice,
/// by Fincke-Pohst on -G (exact rational LDL^T, integer backtracking).
/// Output is closed under negation and sorted lexicographically.
/// Throws NotNegativeDefinite, or EnumerationLimit past max_count
/// (default from HKLATTICE_MAX_ENUM, else 10^6).
std::vector<LatticeVector> enumerate_bounded_norm(const Lattice& l, const Int& lower,
                                                  long max_count = -1);

/// Enumeration cap currently in force (env HKLATTICE_MAX_ENUM or 10^6).
long enumeration_limit();

}  // namespace hklattice
