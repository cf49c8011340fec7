#include "wpsing/weight.hpp"

#include <algorithm>
#include <sstream>

namespace wpsing {

Weight3::Weight3(Int e1_, Int e2_, Int e3_)
    : e1(std::move(e1_)), e2(std::move(e2_)), e3(std::move(e3_)) {
  if (e1 < 1 || e2 < 1 || e3 < 1) throw argument_error("Weight3: weights must be positive");
  if (gcd_many({e1, e2, e3}) != 1) throw argument_error("Weight3: gcd of weights must be 1");
}

std::string Weight3::str() const { return e1.str() + "," + e2.str() + "," + e3.str(); }

Weight3 Weight3::parse(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::string t1, t2, t3, rest;
  if (!(in >> t1 >> t2 >> t3) || (in >> rest))
    throw argument_error("Weight3: expected 'e1,e2,e3', got '" + std::string(text) + "'");
  try {
    return Weight3(Int(t1), Int(t2), Int(t3));
  } catch (const std::runtime_error& e) {
    throw argument_error("Weight3: cannot parse '" + std::string(text) + "'");
  }
}

WeightNormalization normalize_weight(const Weight3& w) {
  WeightNormalization n;
  n.d1 = gcd2(w.e2, w.e3);
  n.d2 = gcd2(w.e1, w.e3);
  n.d3 = gcd2(w.e1, w.e2);
  n.a1 = w.e1 / (n.d2 * n.d3);
  n.a2 = w.e2 / (n.d1 * n.d3);
  n.a3 = w.e3 / (n.d1 * n.d2);
  return n;
}

namespace {

bool pairwise_coprime3(const Int& a, const Int& b, const Int& c) {
  return gcd2(a, b) == 1 && gcd2(a, c) == 1 && gcd2(b, c) == 1;
}

}  // namespace

std::array<CyclicQuotient, 3> vertex_singularities(const Weight3& eta) {
  if (!pairwise_coprime3(eta.e1, eta.e2, eta.e3))
    throw argument_error("vertex_singularities: weight must be pairwise coprime");
  return {CyclicQuotient(eta.e1, eta.e2, eta.e3), CyclicQuotient(eta.e2, eta.e1, eta.e3),
          CyclicQuotient(eta.e3, eta.e1, eta.e2)};
}

Rational bezout(const Int& deg1, const Int& deg2, const Weight3& w) {
  if (deg1 < 0 || deg2 < 0) throw argument_error("bezout: degrees must be nonnegative");
  return Rational(deg1 * deg2, w.e1 * w.e2 * w.e3);
}

Rational quasi_smooth_genus(const Int& deg_eta, const Weight3& eta) {
  if (!pairwise_coprime3(eta.e1, eta.e2, eta.e3))
    throw argument_error("quasi_smooth_genus: weight must be pairwise coprime");
  Int sum = eta.e1 + eta.e2 + eta.e3;
  return Rational(deg_eta * (deg_eta - sum), 2 * eta.e1 * eta.e2 * eta.e3) + Rational(1);
}

std::string point_class_name(PointClass c) {
  switch (c) {
    case PointClass::Face: return "T0";
    case PointClass::AxisX: return "X*";
    case PointClass::AxisY: return "Y*";
    case PointClass::AxisZ: return "Z*";
    case PointClass::VertexX: return "Px";
    case PointClass::VertexY: return "Py";
    case PointClass::VertexZ: return "Pz";
  }
  return "?";
}

std::string stratum_label_name(StratumLabel s) {
  switch (s) {
    case StratumLabel::T: return "T";
    case StratumLabel::Lx: return "Lx";
    case StratumLabel::Ly: return "Ly";
    case StratumLabel::Lz: return "Lz";
    case StratumLabel::Px: return "Px";
    case StratumLabel::Py: return "Py";
    case StratumLabel::Pz: return "Pz";
  }
  return "?";
}

std::string ThreefoldGerm::str() const {
  return "1/" + d.str() + "(" + a1.str() + "," + a2.str() + "," + a3.str() + ")";
}

std::vector<PointClass> Stratification::members(StratumLabel s) const {
  std::vector<PointClass> out;
  for (PointClass c : kPointClasses)
    if (stratum_of(c) == s) out.push_back(c);
  return out;
}

namespace {

Int mod_pos(Int x, const Int& d) {
  x %= d;
  if (x < 0) x += d;
  return x;
}

// Five-branch case table for the three 1-dimensional strata: which of the two
// vertices on the closed axis are absorbed into L depends on whether the
// corresponding weight equals the pairwise gcd.
struct AxisCase {
  bool open_axis;       // punctured axis belongs to L
  bool first_vertex;    // first vertex of the closed axis belongs to L
  bool second_vertex;   // second vertex of the closed axis belongs to L
};

AxisCase axis_case(const Int& d, const Int& ev1, const Int& ev2) {
  if (d == 1) return {false, false, false};
  if (d == ev1 && d == ev2) return {true, true, true};
  if (d == ev1) return {true, true, false};
  if (d == ev2) return {true, false, true};
  return {true, false, false};
}

}  // namespace

void require_cremona_identity(const std::array<Int, 3>& alpha, const std::array<Int, 2>& beta) {
  for (const Int& v : alpha)
    if (v < 1) throw argument_error("cremona data: alpha must be positive");
  for (const Int& v : beta)
    if (v < 1) throw argument_error("cremona data: beta must be positive");
  if (gcd2(alpha[0], alpha[1]) != 1 || gcd2(alpha[0], alpha[2]) != 1 ||
      gcd2(alpha[1], alpha[2]) != 1)
    throw argument_error("cremona data: alpha must be pairwise coprime");
  if (alpha[0] * beta[0] + alpha[1] * beta[1] != alpha[2] + alpha[0] * alpha[1])
    throw argument_error("cremona data: need a1*b1 + a2*b2 = a3 + a1*a2");
}

Stratification stratify(const Weight3& w) {
  WeightNormalization n = normalize_weight(w);
  Stratification out{w, {}, {}, {}};
  auto set = [&out](PointClass c, StratumLabel s) {
    out.label_of[static_cast<int>(c)] = s;
  };

  set(PointClass::Face, StratumLabel::T);

  // The closed axis X = {x=0} carries the vertices P_y and P_z, etc.
  AxisCase cx = axis_case(n.d1, w.e2, w.e3);
  AxisCase cy = axis_case(n.d2, w.e1, w.e3);
  AxisCase cz = axis_case(n.d3, w.e1, w.e2);

  set(PointClass::AxisX, cx.open_axis ? StratumLabel::Lx : StratumLabel::T);
  set(PointClass::AxisY, cy.open_axis ? StratumLabel::Ly : StratumLabel::T);
  set(PointClass::AxisZ, cz.open_axis ? StratumLabel::Lz : StratumLabel::T);

  auto vertex_label = [&](const Int& e, StratumLabel own, bool in_first, StratumLabel first,
                          bool in_second, StratumLabel second) {
    if (e == 1) return StratumLabel::T;
    if (in_first) return first;
    if (in_second) return second;
    return own;  // e divides neither of the other weights
  };
  set(PointClass::VertexX,
      vertex_label(w.e1, StratumLabel::Px, cy.first_vertex, StratumLabel::Ly, cz.first_vertex,
                   StratumLabel::Lz));
  set(PointClass::VertexY,
      vertex_label(w.e2, StratumLabel::Py, cx.first_vertex, StratumLabel::Lx, cz.second_vertex,
                   StratumLabel::Lz));
  set(PointClass::VertexZ,
      vertex_label(w.e3, StratumLabel::Pz, cx.second_vertex, StratumLabel::Lx, cy.second_vertex,
                   StratumLabel::Ly));

  // Transverse germs: (C,0) x 1/d_i(e_i,-1) along L_i.
  if (n.d1 > 1) out.line_germ[0] = CyclicQuotient(n.d1, w.e1, n.d1 - 1);
  if (n.d2 > 1) out.line_germ[1] = CyclicQuotient(n.d2, w.e2, n.d2 - 1);
  if (n.d3 > 1) out.line_germ[2] = CyclicQuotient(n.d3, w.e3, n.d3 - 1);

  // 0-dimensional strata are empty when the weight divides a neighbor.
  if (w.e1 > 1 && w.e2 % w.e1 != 0 && w.e3 % w.e1 != 0)
    out.vertex_germ[0] =
        ThreefoldGerm{w.e1, mod_pos(-1, w.e1), mod_pos(w.e2, w.e1), mod_pos(w.e3, w.e1)};
  if (w.e2 > 1 && w.e1 % w.e2 != 0 && w.e3 % w.e2 != 0)
    out.vertex_germ[1] =
        ThreefoldGerm{w.e2, mod_pos(w.e1, w.e2), mod_pos(-1, w.e2), mod_pos(w.e3, w.e2)};
  if (w.e3 > 1 && w.e1 % w.e3 != 0 && w.e2 % w.e3 != 0)
    out.vertex_germ[2] =
        ThreefoldGerm{w.e3, mod_pos(w.e1, w.e3), mod_pos(w.e2, w.e3), mod_pos(-1, w.e3)};

  return out;
}

}  // namespace wpsing
