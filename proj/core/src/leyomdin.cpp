#include "wpsing/leyomdin.hpp"

#include <algorithm>

#include "wpsing/brieskorn.hpp"

namespace wpsing {

namespace {

Int require_positive_integer(const Rational& r, const char* what) {
  if (!r.is_integer() || r.sign() <= 0)
    throw consistency_error(std::string(what) + ": value " + r.str() +
                            " is not a positive integer");
  return r.num();
}

void check_deltas(const std::vector<Int>& deltas, const char* what) {
  if (deltas.empty()) throw argument_error(std::string(what) + ": no components");
  for (const Int& d : deltas)
    if (d < 1) throw argument_error(std::string(what) + ": component degrees must be positive");
}

Rational rat_pow(const Rational& base, Int e) {
  Rational out(1);
  Rational b = base;
  while (e > 0) {
    if ((e & 1) != 0) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

}  // namespace

Int si_det(const Int& d, const std::vector<Int>& deltas) {
  check_deltas(deltas, "si_det");
  Int sum = 0, prod = 1;
  for (const Int& x : deltas) {
    sum += x;
    prod *= x;
  }
  if (sum != d) throw argument_error("si_det: component degrees must sum to the cone degree");
  return powi(d + 1, Int(deltas.size()) - 1) * prod;
}

Int ly_det(const Int& d, const Int& k, const std::vector<Int>& deltas,
           const std::vector<Int>& germ_dets) {
  check_deltas(deltas, "ly_det");
  if (k < 1) throw argument_error("ly_det: k must be positive");
  Int sum = 0;
  Rational value(1);
  for (const Int& x : deltas) {
    sum += x;
    value *= Rational(x);
  }
  if (sum != d) throw argument_error("ly_det: component degrees must sum to the cone degree");
  value *= rat_pow(Rational(d + k, k), Int(deltas.size()) - 1);
  for (const Int& g : germ_dets) {
    if (g < 1) throw argument_error("ly_det: germ determinants must be positive");
    value *= Rational(g);
  }
  return require_positive_integer(value, "ly_det");
}

namespace {

struct WlyComponents {
  // degrees of all exceptional components: the curve components followed by
  // the axis components, with their orbifold scale factors d_i (1 for curves)
  std::vector<Int> degrees;
  std::vector<Int> scales;
  Int ee;  // e1 e2 e3
};

WlyComponents wly_components(const WlyCurveData& data) {
  check_deltas(data.deltas, "wly");
  if (data.k < 1) throw argument_error("wly: k must be positive");
  WeightNormalization n = normalize_weight(data.weight);
  Int ddd = n.d1 * n.d2 * n.d3;
  Int sum = 0;
  for (const Int& delta : data.deltas) {
    if (delta % ddd != 0)
      throw argument_error("wly: component degree " + delta.str() +
                           " not divisible by d1*d2*d3 = " + ddd.str());
    sum += delta;
  }
  if (data.eps_x) sum += data.weight.e1;
  if (data.eps_y) sum += data.weight.e2;
  if (data.eps_z) sum += data.weight.e3;
  if (sum != data.d)
    throw argument_error("wly: component degrees and axes must sum to the cone degree");

  WlyComponents out;
  out.ee = data.weight.e1 * data.weight.e2 * data.weight.e3;
  for (const Int& delta : data.deltas) {
    out.degrees.push_back(delta);
    out.scales.push_back(1);
  }
  if (data.eps_x) {
    out.degrees.push_back(data.weight.e1);
    out.scales.push_back(n.d1);
  }
  if (data.eps_y) {
    out.degrees.push_back(data.weight.e2);
    out.scales.push_back(n.d2);
  }
  if (data.eps_z) {
    out.degrees.push_back(data.weight.e3);
    out.scales.push_back(n.d3);
  }
  return out;
}

}  // namespace

RatMatrix wly_intersection_matrix(const WlyCurveData& data) {
  WlyComponents c = wly_components(data);
  const std::size_t s = c.degrees.size();
  Rational base(Int(1), data.k * c.ee);
  RatMatrix m(s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (i == j) {
        m.at(i, i) = -Rational(c.scales[i] * c.scales[i]) *
                     Rational(c.degrees[i] * (data.d - c.degrees[i] + data.k)) * base;
      } else {
        m.at(i, j) = Rational(c.scales[i] * c.scales[j]) *
                     Rational(c.degrees[i] * c.degrees[j]) * base;
      }
    }
  }
  return m;
}

Int wly_det(const WlyCurveData& data) {
  WlyComponents c = wly_components(data);
  const Int s = Int(c.degrees.size());
  Rational value(1);
  for (std::size_t i = 0; i < c.degrees.size(); ++i)
    value *= Rational(c.scales[i] * c.scales[i]) * Rational(c.degrees[i]);
  value *= rat_pow(Rational(data.d + data.k, data.k), s - 1);
  value /= rat_pow(Rational(c.ee), s);
  for (const Int& g : data.germ_dets) {
    if (g < 1) throw argument_error("wly_det: germ determinants must be positive");
    value *= Rational(g);
  }
  return require_positive_integer(value, "wly_det");
}

GermAnalysis cyclic_germ_det(const CyclicGerm& g) {
  if (g.a < 1 || g.b < 1 || g.k < 1)
    throw argument_error("cyclic_germ_det: exponents must be positive");
  BPAnalysis bp = bp_analyze(g.a, g.b, g.k);
  return {bp.det, bp.exceptional_genus, bp.is_qhs};
}

bool ly_rhs_check(const LyRhsInput& in) {
  if (in.component_rational_cuspidal.empty())
    throw argument_error("ly_rhs_check: curve needs at least one component");
  for (bool rc : in.component_rational_cuspidal)
    if (!rc) return false;
  if (in.component_rational_cuspidal.size() > 1 && !in.single_intersection_point) return false;
  for (bool qhs : in.germ_links_qhs)
    if (!qhs) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Conjecture scans

namespace {

// Least polynomial (in the class index j) interpolating vs, via forward
// differences; empty result when vs does not stabilize with at least two
// confirming zero differences.
std::optional<std::vector<Rational>> poly_fit(const std::vector<Int>& vs) {
  std::vector<Rational> row;
  row.reserve(vs.size());
  for (const Int& v : vs) row.emplace_back(v);
  std::vector<std::vector<Rational>> diffs = {row};
  while (diffs.back().size() >= 2) {
    const auto& prev = diffs.back();
    bool all_zero = true;
    for (const Rational& v : prev) all_zero = all_zero && v.is_zero();
    if (all_zero) break;
    std::vector<Rational> next;
    next.reserve(prev.size() - 1);
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
    diffs.push_back(std::move(next));
  }
  const auto& last = diffs.back();
  bool stabilized = last.size() >= 2;
  for (const Rational& v : last) stabilized = stabilized && v.is_zero();
  if (!stabilized) return std::nullopt;

  // Newton form sum_i diffs[i][0] * C(j, i), expanded in powers of j.
  std::size_t degree_bound = diffs.size() - 1;
  std::vector<Rational> coeffs(degree_bound + 1, Rational(0));
  std::vector<Rational> basis = {Rational(1)};  // C(j,0) = 1
  for (std::size_t i = 0; i <= degree_bound; ++i) {
    if (i > 0) {
      // C(j,i) = C(j,i-1) * (j - (i-1)) / i
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      Rational inv_i(Int(1), Int(i));
      Rational shift = Rational(-Int(i - 1)) * inv_i;
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t] * inv_i;
        next[t] += basis[t] * shift;
      }
      basis = std::move(next);
    }
    const Rational& lead = diffs[i][0];
    if (lead.is_zero()) continue;
    for (std::size_t t = 0; t < basis.size(); ++t) coeffs[t] += lead * basis[t];
  }
  while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

// Rewrites a polynomial in the class index j as one in k = r + j*P.
std::vector<Rational> reindex_to_k(const std::vector<Rational>& in_j, const Int& r, const Int& p) {
  // substitute j = (k - r)/p
  Rational slope(Int(1), p);
  Rational offset = Rational(-r) / Rational(p);
  std::vector<Rational> out = {Rational(0)};
  // Horner from the top coefficient
  for (std::size_t i = in_j.size(); i-- > 0;) {
    // out = out * (slope*k + offset) + in_j[i]
    std::vector<Rational> next(out.size() + 1, Rational(0));
    for (std::size_t t = 0; t < out.size(); ++t) {
      next[t + 1] += out[t] * slope;
      next[t] += out[t] * offset;
    }
    next[0] += in_j[i];
    out = std::move(next);
  }
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

}  // namespace

ConjectureScanResult conjecture_scan(const Int& a, const Int& b, const Int& k_max) {
  if (k_max < 12) throw argument_error("conjecture_scan: need k_max >= 12");
  ConjectureScanResult out{a, b, k_max, {}, std::nullopt, lcm2(a, b), {}, false};
  for (Int k = 1; k <= k_max; ++k) out.dets.push_back(cyclic_germ_det({a, b, k}).det);

  for (Int p = 1; 3 * p <= k_max; ++p) {
    std::vector<std::vector<Rational>> fits;
    bool ok = true;
    for (Int r = 1; r <= p && ok; ++r) {
      std::vector<Int> vs;
      for (Int k = r; k <= k_max; k += p)
        vs.push_back(out.dets[(k - 1).convert_to<std::size_t>()]);
      auto fit = poly_fit(vs);
      if (!fit) {
        ok = false;
        break;
      }
      fits.push_back(reindex_to_k(*fit, r, p));
    }
    if (ok) {
      out.period = p;
      out.fits = std::move(fits);
      break;
    }
  }
  out.consistent = out.period.has_value() && out.monodromy_order % *out.period == 0;
  return out;
}

std::vector<Conjecture2Hit> conjecture2_scan(const Int& bound) {
  if (bound < 2) throw argument_error("conjecture2_scan: bound must be at least 2");
  std::vector<Conjecture2Hit> hits;

  // cusp germ types x^a + y^b within the bound
  std::vector<std::pair<Int, Int>> germ_types;
  for (Int a = 2; a <= bound; ++a)
    for (Int b = a; b <= bound; ++b) germ_types.emplace_back(a, b);

  // partitions of d, nonincreasing
  auto partitions = [](const Int& d) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur;
    auto rec = [&](auto&& self, Int rest, Int max) -> void {
      if (rest == 0) {
        out.push_back(cur);
        return;
      }
      for (Int next = std::min(rest, max); next >= 1; --next) {
        cur.push_back(next);
        self(self, rest - next, next);
        cur.pop_back();
      }
    };
    rec(rec, d, d);
    return out;
  };

  for (Int k = 2; k <= bound; ++k) {
    // germ determinants and link types for this k
    std::vector<Int> gdet(germ_types.size());
    std::vector<bool> gqhs(germ_types.size());
    for (std::size_t i = 0; i < germ_types.size(); ++i) {
      GermAnalysis ga = cyclic_germ_det({germ_types[i].first, germ_types[i].second, k});
      gdet[i] = ga.det;
      gqhs[i] = ga.link_qhs;
    }

    for (Int d = 2; d <= bound; ++d) {
      for (const auto& deltas : partitions(d)) {
        Rational base(1);
        for (const Int& x : deltas) base *= Rational(x);
        base *= rat_pow(Rational(d + k, k), Int(deltas.size()) - 1);

        const Rational one(1);
        auto record = [&](std::initializer_list<std::size_t> germ_idx) {
          for (std::size_t gi : germ_idx)
            if (!gqhs[gi]) return;
          Conjecture2Hit hit{d, k, deltas, {}};
          for (std::size_t gi : germ_idx) hit.germs.push_back(germ_types[gi]);
          hits.push_back(std::move(hit));
        };

        // multisets of at most three germs, indices nondecreasing
        const std::size_t g = germ_types.size();
        if (base == one) record({});
        for (std::size_t i = 0; i < g; ++i) {
          Rational vi = base * Rational(gdet[i]);
          if (vi == one) record({i});
          for (std::size_t j = i; j < g; ++j) {
            Rational vj = vi * Rational(gdet[j]);
            if (vj == one) record({i, j});
            for (std::size_t l = j; l < g; ++l) {
              if (vj * Rational(gdet[l]) == one) record({i, j, l});
            }
          }
        }
      }
    }
  }
  return hits;
}

}  // namespace wpsing
