#include "wpsing/plumbing.hpp"

#include <numeric>

namespace wpsing {

PlumbingGraph::PlumbingGraph(std::vector<PlumbVertex> vertices, std::vector<PlumbEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (const PlumbEdge& e : edges_) {
    if (e.u >= vertices_.size() || e.v >= vertices_.size())
      throw argument_error("PlumbingGraph: edge endpoint out of range");
    if (e.u == e.v) throw argument_error("PlumbingGraph: edges must connect distinct vertices");
    if (e.intersection.sign() <= 0)
      throw argument_error("PlumbingGraph: edge intersections must be positive");
  }
  for (const PlumbVertex& v : vertices_) {
    if (v.genus < 0) throw argument_error("PlumbingGraph: negative genus");
    for (const Int& d : v.quotient_orders)
      if (d < 1) throw argument_error("PlumbingGraph: quotient-point orders must be positive");
  }
}

bool PlumbingGraph::all_self_known() const {
  for (const PlumbVertex& v : vertices_)
    if (!v.self) return false;
  return true;
}

PlumbingGraph PlumbingGraph::bamboo(const std::vector<Int>& bs) {
  std::vector<PlumbVertex> vs(bs.size());
  std::vector<PlumbEdge> es;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    vs[i].self = Rational(-bs[i]);
    if (i + 1 < bs.size()) es.push_back({i, i + 1, Rational(1)});
  }
  return PlumbingGraph(std::move(vs), std::move(es));
}

RatMatrix intersection_matrix(const PlumbingGraph& g) {
  if (!g.all_self_known())
    throw state_error("intersection_matrix: unresolved self-intersection");
  RatMatrix a(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) a.at(i, i) = *g.vertices()[i].self;
  for (const PlumbEdge& e : g.edges()) {
    a.at(e.u, e.v) += e.intersection;
    a.at(e.v, e.u) += e.intersection;
  }
  return a;
}

Int det_singularity(const PlumbingGraph& g) {
  RatMatrix a = intersection_matrix(g);
  if (!is_negative_definite(a))
    throw consistency_error("det_singularity: intersection matrix not negative definite");
  Rational det = det_exact(a.negated());
  for (const PlumbVertex& v : g.vertices())
    for (const Int& d : v.quotient_orders) det *= Rational(d);
  if (!det.is_integer() || det.sign() <= 0)
    throw consistency_error("det_singularity: determinant " + det.str() +
                            " is not a positive integer");
  return det.num();
}

PlumbingGraph solve_self_intersections(PlumbingGraph g) {
  for (const PlumbVertex& v : g.vertices())
    if (v.mult.sign() == 0) throw argument_error("solve_self_intersections: zero multiplicity");
  std::vector<Rational> selves(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    Rational acc = g.vertices()[v].contact;
    for (const PlumbEdge& e : g.edges()) {
      if (e.u == v)
        acc += g.vertices()[e.v].mult * e.intersection;
      else if (e.v == v)
        acc += g.vertices()[e.u].mult * e.intersection;
    }
    selves[v] = -(acc / g.vertices()[v].mult);
  }
  for (std::size_t v = 0; v < g.size(); ++v) g.vertices()[v].self = selves[v];
  return g;
}

LinkClassification classify_link(const PlumbingGraph& g) {
  LinkClassification out;
  out.torsion_order = det_singularity(g);

  Int genus_sum = 0;
  for (const PlumbVertex& v : g.vertices()) genus_sum += v.genus;

  // rk H1 of the dual graph: edges - vertices + components.
  std::vector<std::size_t> parent(g.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const PlumbEdge& e : g.edges()) parent[find(e.u)] = find(e.v);
  std::size_t components = 0;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (find(v) == v) ++components;
  Int cycle_rank = Int(g.edges().size()) - Int(g.size()) + Int(components);

  out.rank_h1 = 2 * genus_sum + cycle_rank;
  out.is_qhs = out.rank_h1 == 0;
  out.is_zhs = out.is_qhs && out.torsion_order == 1;
  return out;
}

}  // namespace wpsing
