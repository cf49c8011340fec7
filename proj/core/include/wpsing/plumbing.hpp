#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wpsing/matrix.hpp"

namespace wpsing {

// One exceptional curve of a (partial) resolution. Ambient cyclic quotient
// points sitting on the curve are recorded by their orders only; `contact` is
// the intersection with the strict transform of the reference divisor and
// `mult` its coefficient in the pullback.
struct PlumbVertex {
  int genus = 0;
  std::optional<Rational> self;
  std::vector<Int> quotient_orders;
  Rational contact = Rational(0);
  Rational mult = Rational(1);
};

struct PlumbEdge {
  std::size_t u = 0, v = 0;
  Rational intersection = Rational(1);
};

class PlumbingGraph {
 public:
  PlumbingGraph() = default;
  PlumbingGraph(std::vector<PlumbVertex> vertices, std::vector<PlumbEdge> edges);

  const std::vector<PlumbVertex>& vertices() const { return vertices_; }
  const std::vector<PlumbEdge>& edges() const { return edges_; }
  std::vector<PlumbVertex>& vertices() { return vertices_; }

  std::size_t size() const { return vertices_.size(); }
  bool all_self_known() const;

  static PlumbingGraph bamboo(const std::vector<Int>& bs);

 private:
  std::vector<PlumbVertex> vertices_;
  std::vector<PlumbEdge> edges_;
};

// Symmetric matrix: self-intersections on the diagonal, summed edge
// intersections off it. Throws state_error while any self is unknown.
RatMatrix intersection_matrix(const PlumbingGraph& g);

// det(-A) times the product of the annotated quotient-point orders. The
// matrix must be negative definite and the result a positive integer.
Int det_singularity(const PlumbingGraph& g);

// Solves every self-intersection from the pullback relations
//   mult_v * self_v + contact_v + sum_{u != v} mult_u * (edge uv) = 0.
PlumbingGraph solve_self_intersections(PlumbingGraph g);

struct LinkClassification {
  Int rank_h1 = 0;
  Int torsion_order = 1;
  bool is_qhs = false;
  bool is_zhs = false;
};

LinkClassification classify_link(const PlumbingGraph& g);

// JSON round trip; rationals travel as strings "p/q".
std::string graph_to_json(const PlumbingGraph& g);
PlumbingGraph graph_from_json(const std::string& text);

}  // namespace wpsing
