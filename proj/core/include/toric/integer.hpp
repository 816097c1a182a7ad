#pragma once

// Exact integer and rational scalars used throughout the library.

#include <string>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace toric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

/// Floor division; the divisor must be nonzero.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

struct ExtendedGcd {
  Integer g;  // nonnegative
  Integer x;
  Integer y;  // x * a + y * b == g
};

inline ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, Integer(old_r - q * r));
    std::tie(old_s, s) = std::make_tuple(s, Integer(old_s - q * s));
    std::tie(old_t, t) = std::make_tuple(t, Integer(old_t - q * t));
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace toric
