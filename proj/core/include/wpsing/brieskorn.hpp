#pragma once

#include <array>

#include "wpsing/plumbing.hpp"
#include "wpsing/weight.hpp"

namespace wpsing {

// Derived data of the surface germ x^n1 + y^n2 + z^n3 = 0.
struct BPAnalysis {
  Int n1, n2, n3;
  Int e;                     // gcd of the exponents
  std::array<Int, 3> alpha;  // pairwise coprime, alpha_k = gcd(n_i,n_j)/e
  std::array<Int, 3> dd;     // pairwise coprime, d_i = n_i/(e a_j a_k)
  Weight3 omega;             // (a1 d2 d3, a2 d1 d3, a3 d1 d2)
  Int degree;                // n1 n2 n3 / (e^2 a1 a2 a3)
  Int exceptional_genus;     // genus of the exceptional curve
  Int det;                   // e d1^{e a1 - 1} d2^{e a2 - 1} d3^{e a3 - 1}
  bool is_qhs = false;
  bool is_zhs = false;       // is_qhs and det == 1
};

BPAnalysis bp_analyze(const Int& n1, const Int& n2, const Int& n3);

// Checks that the unsimplified determinant expression
// d/((d1 d2 d3)^2 a1 a2 a3) * (d1^a1 d2^a2 d3^a3)^e equals the closed form.
bool bp_consistency(const Int& n1, const Int& n2, const Int& n3);

// The complete-intersection family in C^4 cut out by
//   x1^n1 - x0^n0 + x2^n2 - x0^b20 x1^b21 = 0
//   x2^n2 - x0^b20 x1^b21 + x3^n3 - x0^b30 x1^b31 x2^b32 = 0.
struct Family4Input {
  Int n0, n1, n2, n3;
  Int b20, b21;
  Int b30 = 0, b31 = 0, b32 = 0;
};

struct Family4Analysis {
  Family4Input input;
  Int n;                // n0 n1 n2 n3
  Int b;                // b20 n1 + b21 n0
  Int b2p, b3p;         // weighted blow-up offsets; b2p >= 0 is required
  Int m;                // gcd(n3, b)
  Int mult1, mult2;     // pullback coefficients N1 = n, N2 = (b2p + n)/m
  bool pairwise_coprime = false;
  Int det;              // n2^{m-1} in the coprime case, the general closed
                        // form otherwise (both agree when coprime)
  Int det_closed;       // n2^{m-1}
  Int remark_det;       // general closed form
  bool zhs = false;
  // component data of the exceptional locus
  Int n23, n123, n023;
  Int genus_e1_component;  // each of the n23 components of the first curve
  Int genus_e2;
};

Family4Analysis family4_analyze(const Family4Input& in);

// Self-intersections as functions of the undetermined chart order dq.
Rational family4_a1(const Family4Analysis& a, const Int& dq);
Rational family4_a2(const Family4Analysis& a, const Int& dq);

// Two-vertex partial-resolution graph with edge 1/dq and annotated orders
// {n0, n1, dq} and {n2 x m, n3/m}; only available in the coprime branch.
PlumbingGraph family4_graph(const Family4Analysis& a, const Int& dq);
Int family4_graph_det(const Family4Analysis& a, const Int& dq);

// gcd(n_i, n_j) = 1 for all i != j, and m = 1.
bool family4_zhs_criterion(const Family4Input& in);

}  // namespace wpsing
