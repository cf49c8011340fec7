#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wpsing/errors.hpp"

namespace wpsing {

using Int = boost::multiprecision::cpp_int;

inline Int gcd2(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm2(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs_int(const Int& a) { return boost::multiprecision::abs(a); }

// gcd of a nonempty list; all-zero lists have gcd 0.
Int gcd_many(const std::vector<Int>& values);

// g = gcd(a,b) together with x, y such that a*x + b*y = g.
struct BezoutTriple {
  Int g, x, y;
};
BezoutTriple extended_gcd(const Int& a, const Int& b);

// Inverse of a modulo m, in [0, m). Requires gcd(a, m) = 1.
Int mod_inverse(const Int& a, const Int& m);

// base^exp for exp >= 0.
Int powi(const Int& base, const Int& exp);

// Hirzebruch-Jung ("minus") continued fraction of d/a:
//   d/a = b1 - 1/(b2 - 1/(... - 1/bn)),  all bi >= 2.
// Requires 0 < a < d and gcd(a, d) = 1.
std::vector<Int> hj_expansion(const Int& d, const Int& a);

}  // namespace wpsing
