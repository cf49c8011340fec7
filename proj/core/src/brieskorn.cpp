#include "wpsing/brieskorn.hpp"

namespace wpsing {

namespace {

Int exact_div(const Int& a, const Int& b, const char* what) {
  if (b == 0 || a % b != 0)
    throw consistency_error(std::string(what) + ": " + a.str() + " not divisible by " + b.str());
  return a / b;
}

}  // namespace

BPAnalysis bp_analyze(const Int& n1, const Int& n2, const Int& n3) {
  if (n1 < 1 || n2 < 1 || n3 < 1) throw argument_error("bp_analyze: exponents must be positive");
  Int e = gcd_many({n1, n2, n3});
  std::array<Int, 3> a = {exact_div(gcd2(n2, n3), e, "bp alpha"),
                          exact_div(gcd2(n1, n3), e, "bp alpha"),
                          exact_div(gcd2(n1, n2), e, "bp alpha")};
  std::array<Int, 3> d = {exact_div(n1, e * a[1] * a[2], "bp d"),
                          exact_div(n2, e * a[0] * a[2], "bp d"),
                          exact_div(n3, e * a[0] * a[1], "bp d")};
  BPAnalysis out{n1,
                 n2,
                 n3,
                 e,
                 a,
                 d,
                 Weight3(a[0] * d[1] * d[2], a[1] * d[0] * d[2], a[2] * d[0] * d[1]),
                 exact_div(n1 * n2 * n3, e * e * a[0] * a[1] * a[2], "bp degree"),
                 0,
                 0};

  Int twice_genus = e * e * a[0] * a[1] * a[2] - e * (a[0] + a[1] + a[2]) + 2;
  out.exceptional_genus = exact_div(twice_genus, 2, "bp genus");
  if (out.exceptional_genus < 0) throw consistency_error("bp genus negative");

  out.det = e * powi(d[0], e * a[0] - 1) * powi(d[1], e * a[1] - 1) * powi(d[2], e * a[2] - 1);

  bool all_alpha_one = a[0] == 1 && a[1] == 1 && a[2] == 1;
  bool two_alpha_one = (a[0] == 1 && a[1] == 1) || (a[0] == 1 && a[2] == 1) ||
                       (a[1] == 1 && a[2] == 1);
  out.is_qhs = (all_alpha_one && e == 2) || (two_alpha_one && e == 1);
  out.is_zhs = out.is_qhs && out.det == 1;
  return out;
}

bool bp_consistency(const Int& n1, const Int& n2, const Int& n3) {
  BPAnalysis bp = bp_analyze(n1, n2, n3);
  Rational lhs =
      Rational(bp.degree,
               powi(bp.dd[0] * bp.dd[1] * bp.dd[2], 2) * bp.alpha[0] * bp.alpha[1] * bp.alpha[2]) *
      Rational(powi(powi(bp.dd[0], bp.alpha[0]) * powi(bp.dd[1], bp.alpha[1]) *
                        powi(bp.dd[2], bp.alpha[2]),
                    bp.e));
  return lhs == Rational(bp.det);
}

Family4Analysis family4_analyze(const Family4Input& in) {
  for (const Int* v : {&in.n0, &in.n1, &in.n2, &in.n3})
    if (*v < 1) throw argument_error("family4: exponents must be positive");
  for (const Int* v : {&in.b20, &in.b21, &in.b30, &in.b31, &in.b32})
    if (*v < 0) throw argument_error("family4: monomial exponents must be nonnegative");

  Family4Analysis out;
  out.input = in;
  out.n = in.n0 * in.n1 * in.n2 * in.n3;
  out.b = in.b20 * in.n1 + in.b21 * in.n0;
  out.b2p = in.b20 * (out.n / in.n0) + in.b21 * (out.n / in.n1) - out.n;
  out.b3p = in.b30 * (out.n / in.n0) + in.b31 * (out.n / in.n1) + in.b32 * (out.n / in.n2) - out.n;
  if (out.b2p < 0)
    throw argument_error("family4: b2' = " + out.b2p.str() + " < 0, second blow-up undefined");
  out.m = gcd2(in.n3, out.b);
  out.mult1 = out.n;
  if ((out.b2p + out.n) % out.m != 0)
    throw consistency_error("family4: m does not divide b2' + n");
  out.mult2 = (out.b2p + out.n) / out.m;

  out.pairwise_coprime = gcd2(in.n0, in.n1) == 1 && gcd2(in.n0, in.n2) == 1 &&
                         gcd2(in.n0, in.n3) == 1 && gcd2(in.n1, in.n2) == 1 &&
                         gcd2(in.n1, in.n3) == 1 && gcd2(in.n2, in.n3) == 1;

  out.det_closed = powi(in.n2, out.m - 1);

  out.n23 = gcd2(in.n2, in.n3);
  out.n123 = exact_div(in.n1 * in.n2 * in.n3, lcm2(lcm2(in.n1, in.n2), in.n3), "family4 n123");
  out.n023 = exact_div(in.n0 * in.n2 * in.n3, lcm2(lcm2(in.n0, in.n2), in.n3), "family4 n023");

  Int lcm_all = lcm2(lcm2(in.n0, in.n1), lcm2(in.n2, in.n3));
  Int lcm123 = lcm2(lcm2(in.n1, in.n2), in.n3);
  Int lcm023 = lcm2(lcm2(in.n0, in.n2), in.n3);
  out.remark_det = powi(exact_div(out.b, out.m, "family4 b/m"), out.n23 - 1) *
                   powi(exact_div(lcm_all, lcm123, "family4 N1/alpha"), out.n123 - out.n23) *
                   powi(exact_div(lcm_all, lcm023, "family4 N1/beta"), out.n023 - out.n23) *
                   powi(exact_div(in.n2, out.n23, "family4 n2/n23"), out.m - 1);
  out.det = out.pairwise_coprime ? out.det_closed : out.remark_det;

  out.genus_e1_component = exact_div(
      (exact_div(out.n123, out.n23, "family4 genus") - 1) *
          (exact_div(out.n023, out.n23, "family4 genus") - 1),
      2, "family4 genus");
  out.genus_e2 = exact_div((out.n23 - 1) * (out.m - 1), 2, "family4 genus");

  out.zhs = out.pairwise_coprime && out.m == 1;
  return out;
}

Rational family4_a1(const Family4Analysis& a, const Int& dq) {
  if (dq < 1) throw argument_error("family4: dq must be positive");
  return Rational(a.mult2, a.mult1 * dq);
}

Rational family4_a2(const Family4Analysis& a, const Int& dq) {
  if (dq < 1) throw argument_error("family4: dq must be positive");
  return (Rational(a.m) + Rational(a.mult1, dq)) / Rational(a.mult2);
}

PlumbingGraph family4_graph(const Family4Analysis& a, const Int& dq) {
  if (!a.pairwise_coprime)
    throw argument_error("family4_graph: graph assembly needs pairwise coprime exponents");
  if (dq < 1) throw argument_error("family4: dq must be positive");
  PlumbVertex e1, e2;
  e1.mult = Rational(a.mult1);
  e1.contact = Rational(0);
  e1.quotient_orders = {a.input.n0, a.input.n1, dq};
  e2.mult = Rational(a.mult2);
  e2.contact = Rational(a.m);
  Int count = a.m;
  while (count > 0) {
    e2.quotient_orders.push_back(a.input.n2);
    --count;
  }
  e2.quotient_orders.push_back(a.input.n3 / a.m);
  PlumbingGraph g({e1, e2}, {{0, 1, Rational(Int(1), dq)}});
  return solve_self_intersections(std::move(g));
}

Int family4_graph_det(const Family4Analysis& a, const Int& dq) {
  return det_singularity(family4_graph(a, dq));
}

bool family4_zhs_criterion(const Family4Input& in) {
  return family4_analyze(in).zhs;
}

}  // namespace wpsing
