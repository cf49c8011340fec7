#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "wpsing/rational.hpp"

namespace wpsing {

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

// Invariant factors d1 | d2 | ... of M, length min(rows, cols), zeros trailing.
std::vector<Int> smith_normal_form(IntMatrix m);

// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
Int det_bareiss(IntMatrix m);

// Dense square rational matrix.
class RatMatrix {
 public:
  explicit RatMatrix(std::size_t n) : n_(n), a_(n * n) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t size() const { return n_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  RatMatrix negated() const;
  RatMatrix leading_minor(std::size_t k) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Rational> a_;
};

// Exact determinant: rows are scaled to a common denominator and the integer
// determinant is computed fraction-free.
Rational det_exact(const RatMatrix& m);

// Leading principal minors alternate in sign, starting negative.
bool is_negative_definite(const RatMatrix& m);

}  // namespace wpsing
