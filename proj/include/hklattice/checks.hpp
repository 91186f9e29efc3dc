#pragma once

#include <string>
#include <vector>

#include "hklattice/numeric.hpp"

namespace hklattice {

/// One verified numeric claim: passed iff expected == computed exactly.
struct CheckResult {
  std::string name;
  Rat expected;
  Rat computed;
  bool passed;
  std::string location;

  static CheckResult make(std::string name, Rat expected, Rat computed,
                          std::string location) {
    bool ok = expected == computed;
    return CheckResult{std::move(name), std::move(expected), std::move(computed), ok,
                       std::move(location)};
  }
};

/// c_2 of the normal bundle of a degree-10 K3 embedded in a smooth quadric
/// 4-fold: reads the degree-2 coefficient of (1+H)^6/(1+2H), then evaluates
/// 7 * deg S - e(K3) = 70 - 24 = 46.
CheckResult check_normal_bundle_46();

/// Self-intersection of the K3 class in the middle cohomology ZA + ZB of the
/// quadric 4-fold (A^2 = B^2 = 1, A.B = 0): class 5A + 5B, square 50.
CheckResult check_quadric_selfint_50();

/// The same with plane-family imbalance i: class (5+i)A + (5-i)B.
Int quadric_surface_class_selfint(const Int& deg_s, const Int& g, const Int& i);

/// Top power 3 * 2^2 = 12 on a square-2 class of Hilb^2; degree of the
/// branch sextic 12/2 = 6; and 6 = (degree-7 singular-quadric hypersurface
/// in P^6) minus its hyperplane component.
CheckResult check_fujiki_12_and_degY_6();

struct MarkmanRow {
  Int r;
  Int g_max;   // largest g with <v,v> <= 4r - 2 for v = r + l + r*eta, (l,l) = 2g-2
  Int codim;   // 2r + 1, codimension of the non-globally-generated locus beyond it
};

/// Regularity table: g_max recomputed from the Mukai pairing bound, one row
/// per rank r = 1..r_max.
std::vector<MarkmanRow> markman_table(int r_max);

/// Runs the involution solver on the rank-1 genus-g fixture: asserts the
/// solution beta = -(g-3) - l - 2*eta and that the square-2 reflection sends
/// it to 2 + l + (g-3)*eta.
CheckResult check_beta_and_theta_delta(const Int& g);

/// The whole verification suite, report order fixed by declaration order.
std::vector<CheckResult> run_all();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace hklattice
