#pragma once

#include <string>

#include "wpsing/rational.hpp"

namespace wpsing {

// Element a + b*zeta of Q(zeta) for a primitive cube root of unity,
// zeta^2 = -zeta - 1. Plain rationals embed with b = 0.
class Zeta3 {
 public:
  Zeta3() = default;
  Zeta3(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Zeta3(long long a) : a_(Rational(a)) {}  // NOLINT(google-explicit-constructor)
  Zeta3(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Zeta3 zeta() { return Zeta3(Rational(0), Rational(1)); }
  static Zeta3 zeta2() { return Zeta3(Rational(-1), Rational(-1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& zeta_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  Zeta3 operator-() const { return Zeta3(-a_, -b_); }
  Zeta3& operator+=(const Zeta3& o);
  Zeta3& operator-=(const Zeta3& o);
  Zeta3& operator*=(const Zeta3& o);

  friend Zeta3 operator+(Zeta3 x, const Zeta3& y) { return x += y; }
  friend Zeta3 operator-(Zeta3 x, const Zeta3& y) { return x -= y; }
  friend Zeta3 operator*(Zeta3 x, const Zeta3& y) { return x *= y; }

  // Galois conjugate a + b*zeta^2; norm = a^2 - a b + b^2.
  Zeta3 conjugate() const { return Zeta3(a_ - b_, -b_); }
  Rational norm() const;
  Zeta3 inverse() const;

  friend bool operator==(const Zeta3&, const Zeta3&) = default;

  std::string str() const;

 private:
  Rational a_, b_;
};

}  // namespace wpsing
