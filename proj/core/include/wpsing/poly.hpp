#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "wpsing/weight.hpp"
#include "wpsing/zeta3.hpp"

namespace wpsing {

// Exponent vector over the variables x, y, z, w; unused slots stay zero.
using Monomial = std::array<std::int64_t, 4>;

// Sparse multivariate polynomial with Q(zeta) coefficients. No zero
// coefficients are stored; exponents are nonnegative and bounded to 64 bits.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 3);

  static MultiPoly constant(const Zeta3& c, int nvars = 3);
  static MultiPoly variable(int index, int nvars = 3);
  static MultiPoly monomial(const Zeta3& c, const Monomial& m, int nvars = 3);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Zeta3>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Zeta3& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scaled(const Zeta3& c) const;
  MultiPoly pow(std::int64_t e) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  Zeta3 evaluate(const std::array<Zeta3, 4>& point) const;

  // Weighted degree of a monomial / the maximal one of the polynomial.
  static Int wdegree(const Monomial& m, const Weight3& w);
  Int max_wdegree(const Weight3& w) const;
  // True iff every monomial has the same w-degree (zero counts as homogeneous).
  bool is_whomogeneous(const Weight3& w, Int* degree = nullptr) const;

  // Monomials sorted graded-lex (total degree first, then x > y > z > w).
  std::string str() const;

 private:
  int nvars_;
  std::map<Monomial, Zeta3> terms_;
};

// Grammar: terms joined by +/-; a term is a '*'-separated product of integer
// or fraction literals, "zeta", variables x,y,z,w with optional nonnegative
// '^' powers, and parenthesized subexpressions. Whitespace-insensitive.
// Reports syntax errors with their position.
MultiPoly parse_poly(std::string_view text);

std::map<Int, MultiPoly> wdegree_decompose(const MultiPoly& f, const Weight3& w);

// Substitution x -> y^a1 z, y -> x^a2 z, z -> x^b1 y^b2. Requires alpha
// pairwise coprime and a1*b1 + a2*b2 = a3 + a1*a2; a homogeneous f of degree
// n is sent to an omega-homogeneous polynomial of degree n*(a1*a2 + a3).
MultiPoly cremona_push(const MultiPoly& f, const std::array<Int, 3>& alpha,
                       const std::array<Int, 2>& beta);

// f = x^a y^b z^c w^d * g with g divisible by no variable; returns (g, exps).
std::pair<MultiPoly, Monomial> strip_monomial_factor(const MultiPoly& f);

// Substitution x -> x^d1, y -> y^d2, z -> z^d3 for pairwise coprime d_i >= 1.
MultiPoly kummer_pull(const MultiPoly& f, const std::array<Int, 3>& d);

// The smooth cubic tangent to the axes at its listed inflection points;
// lambda must be a cube root of unity.
MultiPoly catalog_cubic(const Zeta3& lambda);
// Conic tangent to the three coordinate axes.
MultiPoly catalog_conic();
// Image of the tritangent conic under the weighted Cremona substitution,
// written out monomial by monomial.
MultiPoly catalog_cremona_conic(const std::array<Int, 3>& alpha, const std::array<Int, 2>& beta);
// Pullback of the tritangent conic under the weighted Kummer cover.
MultiPoly catalog_kummer_conic(const std::array<Int, 3>& d);

using ProjPoint = std::array<Zeta3, 3>;

// Tangency points of catalog_cubic(lambda) with the axes x=0, y=0, z=0.
std::array<ProjPoint, 3> flex_tangency_points(const Zeta3& lambda);

// True iff the 3x3 coordinate determinant vanishes in Q(zeta).
bool are_collinear(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3);

}  // namespace wpsing
