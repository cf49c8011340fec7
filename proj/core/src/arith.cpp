#include "wpsing/arith.hpp"

namespace wpsing {

Int gcd_many(const std::vector<Int>& values) {
  if (values.empty()) throw argument_error("gcd_many: empty list");
  Int g = 0;
  for (const Int& v : values) {
    g = gcd2(g, v);
    if (g == 1) break;
  }
  return g;
}

BezoutTriple extended_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
    t = old_y - q * y;
    old_y = y;
    y = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return {old_r, old_x, old_y};
}

Int mod_inverse(const Int& a, const Int& m) {
  if (m < 1) throw argument_error("mod_inverse: modulus must be positive");
  if (m == 1) return 0;
  auto [g, x, y] = extended_gcd(a, m);
  (void)y;
  if (g != 1) throw argument_error("mod_inverse: arguments are not coprime");
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

Int powi(const Int& base, const Int& exp) {
  if (exp < 0) throw argument_error("powi: negative exponent");
  Int result = 1, b = base, e = exp;
  while (e > 0) {
    if ((e & 1) != 0) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

std::vector<Int> hj_expansion(const Int& d, const Int& a) {
  if (d < 2 || a <= 0 || a >= d) throw argument_error("hj_expansion: need 0 < a < d");
  if (gcd2(a, d) != 1) throw argument_error("hj_expansion: a and d must be coprime");
  std::vector<Int> bs;
  Int p = d, q = a;
  while (q > 0) {
    // b = ceil(p/q); the next fraction is q / (b*q - p).
    Int b = (p + q - 1) / q;
    bs.push_back(b);
    Int next = b * q - p;
    p = q;
    q = next;
  }
  return bs;
}

}  // namespace wpsing
