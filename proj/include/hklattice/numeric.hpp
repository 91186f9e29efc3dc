#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hklattice {

// All decision procedures run on unbounded integers / exact rationals.
// Doubles appear only in display paths (CLI reports, growth-rate estimates).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Vec = std::vector<Int>;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

/// Floor of an exact rational.
inline Int floor_rat(const Rat& r) {
  Int n = boost::multiprecision::numerator(r);
  Int d = boost::multiprecision::denominator(r);  // > 0 by cpp_rational normalization
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

/// Floor of sqrt(n), n >= 0.
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline Int factorial(unsigned n) {
  Int f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

/// binom(x, k) as the integer-valued polynomial x(x-1)...(x-k+1)/k!,
/// defined for any integer x (negative tops included).
inline Int binomial(const Int& x, unsigned k) {
  Int num = 1;
  for (unsigned i = 0; i < k; ++i) num *= (x - i);
  return num / factorial(k);
}

inline std::string to_string(const Int& n) { return n.str(); }

inline std::string to_string(const Rat& r) {
  Int n = boost::multiprecision::numerator(r);
  Int d = boost::multiprecision::denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

}  // namespace hklattice
