#include "wpsing/matrix.hpp"

#include <algorithm>

namespace wpsing {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw argument_error("IntMatrix: ragged initializer");
    for (const auto& v : r) a_.push_back(v);
  }
}

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(i, k), m.at(j, k));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < m.rows(); ++k) std::swap(m.at(k, i), m.at(k, j));
}

}  // namespace

std::vector<Int> smith_normal_form(IntMatrix m) {
  const std::size_t r = m.rows(), c = m.cols();
  const std::size_t n = std::min(r, c);
  std::vector<Int> out(n, 0);

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing submatrix becomes the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      Int best = 0;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          const Int& v = m.at(i, j);
          if (v == 0) continue;
          Int av = abs_int(v);
          if (!found || av < best) {
            found = true;
            best = av;
            pi = i;
            pj = j;
          }
        }
      if (!found) return out;  // trailing zeros stay zero
      swap_rows(m, t, pi);
      swap_cols(m, t, pj);
      const Int p = m.at(t, t);

      // Knock the pivot row and column down to remainders.
      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (m.at(i, t) == 0) continue;
        Int q = m.at(i, t) / p;
        for (std::size_t j = t; j < c; ++j) m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (m.at(t, j) == 0) continue;
        Int q = m.at(t, j) / p;
        for (std::size_t i = t; i < r; ++i) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Pivot must divide everything that remains, or the chain breaks.
      bool fixed = false;
      for (std::size_t i = t + 1; i < r && !fixed; ++i)
        for (std::size_t j = t + 1; j < c && !fixed; ++j)
          if (m.at(i, j) % p != 0) {
            for (std::size_t k = t; k < c; ++k) m.at(t, k) += m.at(i, k);
            fixed = true;
          }
      if (fixed) continue;

      out[t] = abs_int(p);
      break;
    }
  }
  return out;
}

Int det_bareiss(IntMatrix m) {
  if (m.rows() != m.cols()) throw argument_error("det_bareiss: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && m.at(s, k) == 0) ++s;
      if (s == n) return 0;
      swap_rows(m, k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = v / prev;  // exact by Sylvester's identity
      }
    prev = m.at(k, k);
  }
  return sign < 0 ? Int(-m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : n_(rows.size()) {
  a_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw argument_error("RatMatrix: initializer not square");
    for (const auto& v : r) a_.push_back(v);
  }
}

RatMatrix RatMatrix::negated() const {
  RatMatrix out(n_);
  for (std::size_t i = 0; i < n_ * n_; ++i) out.a_[i] = -a_[i];
  return out;
}

RatMatrix RatMatrix::leading_minor(std::size_t k) const {
  if (k > n_) throw argument_error("leading_minor: size out of range");
  RatMatrix out(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out.at(i, j) = at(i, j);
  return out;
}

Rational det_exact(const RatMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  IntMatrix scaled(n, n);
  Rational denom(1);
  for (std::size_t i = 0; i < n; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < n; ++j) l = lcm2(l, m.at(i, j).den());
    for (std::size_t j = 0; j < n; ++j)
      scaled.at(i, j) = m.at(i, j).num() * (l / m.at(i, j).den());
    denom *= Rational(l);
  }
  return Rational(det_bareiss(std::move(scaled))) / denom;
}

bool is_negative_definite(const RatMatrix& m) {
  for (std::size_t k = 1; k <= m.size(); ++k) {
    Rational d = det_exact(m.leading_minor(k));
    int expected = (k % 2 == 0) ? 1 : -1;
    if (d.sign() != expected) return false;
  }
  return true;
}

}  // namespace wpsing
