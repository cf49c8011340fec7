#include "wpsing/zeta3.hpp"

namespace wpsing {

Zeta3& Zeta3::operator+=(const Zeta3& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Zeta3& Zeta3::operator-=(const Zeta3& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Zeta3& Zeta3::operator*=(const Zeta3& o) {
  // (a1 + b1 z)(a2 + b2 z), z^2 = -z - 1.
  Rational a = a_ * o.a_ - b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_ - b_ * o.b_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Rational Zeta3::norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

Zeta3 Zeta3::inverse() const {
  if (is_zero()) throw argument_error("Zeta3: inverse of zero");
  Rational n = norm();
  Zeta3 c = conjugate();
  return Zeta3(c.a_ / n, c.b_ / n);
}

std::string Zeta3::str() const {
  if (b_.is_zero()) return a_.str();
  std::string zterm = b_ == Rational(1)    ? "zeta"
                      : b_ == Rational(-1) ? "-zeta"
                                           : b_.str() + "*zeta";
  if (a_.is_zero()) return zterm;
  if (b_.sign() < 0) {
    Zeta3 neg(Rational(0), -b_);
    return a_.str() + "-" + neg.str();
  }
  return a_.str() + "+" + zterm;
}

}  // namespace wpsing
