#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "wpsing/arith.hpp"

namespace wpsing {

// Exact rational number, always reduced, denominator > 0; zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) : num_(n), den_(1) {}       // NOLINT(google-explicit-constructor)
  Rational(Int n, Int d);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  // "p/q", or just "p" for integers.
  std::string str() const;
  static Rational parse(std::string_view text);

 private:
  void reduce();
  Int num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace wpsing
