#pragma once

#include <optional>
#include <vector>

#include "wpsing/matrix.hpp"
#include "wpsing/weight.hpp"

namespace wpsing {

// Determinant of a superisolated singularity with tangent-cone component
// degrees deltas summing to d: (d+1)^{s-1} * delta_1 ... delta_s.
Int si_det(const Int& d, const std::vector<Int>& deltas);

// Determinant for the k-th member of the family: delta_1...delta_s *
// ((d+k)/k)^{s-1} * product of the local germ determinants. Must come out a
// positive integer.
Int ly_det(const Int& d, const Int& k, const std::vector<Int>& deltas,
           const std::vector<Int>& germ_dets);

// Weighted analogue of the tangent-cone data: component degrees deltas (each
// divisible by d1 d2 d3), axis flags, and precomputed local germ
// determinants (singular points of the cone and quotient points along the
// strata alike).
struct WlyCurveData {
  Weight3 weight;
  Int k;
  Int d;
  bool eps_x = false, eps_y = false, eps_z = false;
  std::vector<Int> deltas;
  std::vector<Int> germ_dets;
};

// Intersection matrix of the weighted blow-up: curve components first, then
// the axes that occur as components.
RatMatrix wly_intersection_matrix(const WlyCurveData& data);

// det(-A) of the matrix above in closed form, times the germ determinants;
// asserted to be a positive integer.
Int wly_det(const WlyCurveData& data);

// The surface z^k = x^a + y^b.
struct CyclicGerm {
  Int a, b, k;
};

struct GermAnalysis {
  Int det;
  Int exceptional_genus;
  bool link_qhs = false;
};

GermAnalysis cyclic_germ_det(const CyclicGerm& g);

// Rational-homology-sphere test for the link, from the shape of the tangent
// cone: every component rational cuspidal, a single common intersection
// point when reducible, and all local germ links rational homology spheres.
struct LyRhsInput {
  std::vector<bool> component_rational_cuspidal;
  bool single_intersection_point = true;
  std::vector<bool> germ_links_qhs;
};

bool ly_rhs_check(const LyRhsInput& in);

// Empirical quasi-polynomial structure of k -> det(z^k = x^a + y^b).
struct ConjectureScanResult {
  Int a, b, k_max;
  std::vector<Int> dets;                       // dets[i] for k = i+1
  std::optional<Int> period;                   // least one that fits, if any
  Int monodromy_order;                         // lcm(a, b), for comparison
  std::vector<std::vector<Rational>> fits;     // per residue class, polynomial
                                               // coefficients in k (constant first)
  bool consistent = false;                     // period found and divides lcm(a,b)
};

ConjectureScanResult conjecture_scan(const Int& a, const Int& b, const Int& k_max);

// Exhaustive search for integral-homology-sphere links in the family with
// k > 1: all (d, k, partition of d, cusp germ exponent pairs) within the
// bound, at most three germs per curve. A hit needs determinant 1 and all
// germ links rational homology spheres.
struct Conjecture2Hit {
  Int d, k;
  std::vector<Int> deltas;
  std::vector<std::pair<Int, Int>> germs;
};

std::vector<Conjecture2Hit> conjecture2_scan(const Int& bound);

}  // namespace wpsing
