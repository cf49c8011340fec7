#include <json.hpp>

#include "wpsing/plumbing.hpp"

namespace wpsing {

namespace {

using nlohmann::json;

Rational rat_from_json(const json& j, const char* field) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Int(j.get<long long>()));
  throw argument_error(std::string("graph json: field '") + field +
                       "' must be an integer or a \"p/q\" string");
}

}  // namespace

std::string graph_to_json(const PlumbingGraph& g) {
  json out;
  out["vertices"] = json::array();
  for (const PlumbVertex& v : g.vertices()) {
    json jv;
    jv["genus"] = v.genus;
    if (v.self) jv["self"] = v.self->str();
    json orders = json::array();
    for (const Int& d : v.quotient_orders) orders.push_back(d.str());
    jv["orders"] = orders;
    jv["contact"] = v.contact.str();
    jv["mult"] = v.mult.str();
    out["vertices"].push_back(jv);
  }
  out["edges"] = json::array();
  for (const PlumbEdge& e : g.edges()) {
    json je;
    je["u"] = e.u;
    je["v"] = e.v;
    je["i"] = e.intersection.str();
    out["edges"].push_back(je);
  }
  return out.dump();
}

PlumbingGraph graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw argument_error(std::string("graph json: ") + e.what());
  }
  std::vector<PlumbVertex> vertices;
  for (const json& jv : j.value("vertices", json::array())) {
    PlumbVertex v;
    v.genus = jv.value("genus", 0);
    if (jv.contains("self") && !jv["self"].is_null())
      v.self = rat_from_json(jv["self"], "self");
    if (jv.contains("orders"))
      for (const json& o : jv["orders"]) {
        Rational d = rat_from_json(o, "orders");
        if (!d.is_integer()) throw argument_error("graph json: orders must be integers");
        v.quotient_orders.push_back(d.num());
      }
    if (jv.contains("contact")) v.contact = rat_from_json(jv["contact"], "contact");
    if (jv.contains("mult")) v.mult = rat_from_json(jv["mult"], "mult");
    vertices.push_back(std::move(v));
  }
  std::vector<PlumbEdge> edges;
  for (const json& je : j.value("edges", json::array())) {
    PlumbEdge e;
    if (!je.contains("u") || !je.contains("v"))
      throw argument_error("graph json: edge needs 'u' and 'v'");
    e.u = je["u"].get<std::size_t>();
    e.v = je["v"].get<std::size_t>();
    if (je.contains("i")) e.intersection = rat_from_json(je["i"], "i");
    edges.push_back(std::move(e));
  }
  return PlumbingGraph(std::move(vertices), std::move(edges));
}

}  // namespace wpsing
