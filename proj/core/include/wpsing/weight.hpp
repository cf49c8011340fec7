#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "wpsing/quotient.hpp"

namespace wpsing {

// Weight triple for a weighted projective plane; gcd(e1,e2,e3) = 1.
struct Weight3 {
  Int e1, e2, e3;

  Weight3(Int e1_, Int e2_, Int e3_);

  std::string str() const;
  static Weight3 parse(std::string_view text);

  friend bool operator==(const Weight3&, const Weight3&) = default;
};

// d_k = gcd(e_i, e_j), alpha_k = e_k / (d_i d_j); the alpha are pairwise
// coprime and [x:y:z] -> [x^d1 : y^d2 : z^d3] identifies the two planes.
struct WeightNormalization {
  Int d1, d2, d3;
  Int a1, a2, a3;

  Weight3 eta() const { return Weight3(a1, a2, a3); }
  friend bool operator==(const WeightNormalization&, const WeightNormalization&) = default;
};

WeightNormalization normalize_weight(const Weight3& w);

// Quotient types at the three vertices of the plane with pairwise-coprime
// weight eta: P_x -> 1/a1(a2,a3), P_y -> 1/a2(a1,a3), P_z -> 1/a3(a1,a2).
std::array<CyclicQuotient, 3> vertex_singularities(const Weight3& eta);

// deg1 * deg2 / (e1 e2 e3).
Rational bezout(const Int& deg1, const Int& deg2, const Weight3& w);

// Genus of a quasi-smooth curve of eta-degree deg in the plane of pairwise
// coprime weight eta: deg(deg - |eta|) / (2 a1 a2 a3) + 1, as an exact
// rational; integrality is the caller's concern.
Rational quasi_smooth_genus(const Int& deg_eta, const Weight3& eta);

// Point classes of the exceptional divisor of the weighted blow-up: the open
// face, the three punctured axes and the three vertices.
enum class PointClass { Face, AxisX, AxisY, AxisZ, VertexX, VertexY, VertexZ };
enum class StratumLabel { T, Lx, Ly, Lz, Px, Py, Pz };

constexpr std::array<PointClass, 7> kPointClasses = {
    PointClass::Face,    PointClass::AxisX,   PointClass::AxisY,  PointClass::AxisZ,
    PointClass::VertexX, PointClass::VertexY, PointClass::VertexZ};

std::string point_class_name(PointClass c);
std::string stratum_label_name(StratumLabel s);

// Transverse germ of a 3-fold cyclic quotient point 1/d(a1,a2,a3).
struct ThreefoldGerm {
  Int d, a1, a2, a3;
  std::string str() const;
  friend bool operator==(const ThreefoldGerm&, const ThreefoldGerm&) = default;
};

struct Stratification {
  Weight3 weight;
  // Exactly one label per point class.
  std::array<StratumLabel, 7> label_of;
  // Transverse germ (C,0) x 1/d_i(e_i,-1) for each nonempty 1-dim stratum.
  std::array<std::optional<CyclicQuotient>, 3> line_germ;
  // Germ 1/e_i(..,..,-1) for each nonempty 0-dim stratum.
  std::array<std::optional<ThreefoldGerm>, 3> vertex_germ;

  StratumLabel stratum_of(PointClass c) const { return label_of[static_cast<int>(c)]; }
  std::vector<PointClass> members(StratumLabel s) const;
};

Stratification stratify(const Weight3& w);

// Shared validation for the weighted Cremona data: alpha pairwise coprime,
// beta positive, a1*b1 + a2*b2 = a3 + a1*a2.
void require_cremona_identity(const std::array<Int, 3>& alpha, const std::array<Int, 2>& beta);

}  // namespace wpsing
