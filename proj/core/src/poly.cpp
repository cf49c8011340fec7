#include "wpsing/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace wpsing {

namespace {

constexpr std::int64_t kMaxExp = std::numeric_limits<std::int64_t>::max();

std::int64_t checked_exp(const Int& e) {
  if (e < 0) throw argument_error("MultiPoly: negative exponent");
  if (e > kMaxExp) throw consistency_error("MultiPoly: exponent overflows 64 bits");
  return e.convert_to<std::int64_t>();
}

std::int64_t mul_exp(const Int& a, std::int64_t b) { return checked_exp(a * b); }

std::int64_t add_exp(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw consistency_error("MultiPoly: exponent overflows 64 bits");
  return r;
}

Zeta3 zpow(const Zeta3& base, std::int64_t e) {
  Zeta3 out(Rational(1));
  Zeta3 b = base;
  for (std::int64_t k = e; k > 0; k >>= 1) {
    if (k & 1) out *= b;
    b *= b;
  }
  return out;
}

int needed_vars(const Monomial& m) {
  for (int i = 3; i >= 0; --i)
    if (m[static_cast<std::size_t>(i)] != 0) return i + 1;
  return 0;
}

}  // namespace

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars != 3 && nvars != 4) throw argument_error("MultiPoly: variable count must be 3 or 4");
}

MultiPoly MultiPoly::constant(const Zeta3& c, int nvars) {
  MultiPoly p(nvars);
  p.add_term({0, 0, 0, 0}, c);
  return p;
}

MultiPoly MultiPoly::variable(int index, int nvars) {
  if (index < 0 || index >= nvars) throw argument_error("MultiPoly: variable index out of range");
  Monomial m{0, 0, 0, 0};
  m[static_cast<std::size_t>(index)] = 1;
  return monomial(Zeta3(Rational(1)), m, nvars);
}

MultiPoly MultiPoly::monomial(const Zeta3& c, const Monomial& m, int nvars) {
  MultiPoly p(nvars);
  p.add_term(m, c);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Zeta3& c) {
  if (c.is_zero()) return;
  for (int i = 0; i < 4; ++i) {
    if (m[static_cast<std::size_t>(i)] < 0) throw argument_error("MultiPoly: negative exponent");
    if (i >= nvars_ && m[static_cast<std::size_t>(i)] != 0)
      throw argument_error("MultiPoly: exponent on variable beyond nvars");
  }
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (std::size_t i = 0; i < 4; ++i) m[i] = add_exp(ma[i], mb[i]);
      out.add_term(m, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::scaled(const Zeta3& c) const {
  MultiPoly out(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [m, coef] : terms_) out.add_term(m, coef * c);
  return out;
}

MultiPoly MultiPoly::pow(std::int64_t e) const {
  if (e < 0) throw argument_error("MultiPoly: negative power");
  MultiPoly out = constant(Zeta3(Rational(1)), nvars_);
  MultiPoly b = *this;
  while (e > 0) {
    if (e & 1) out *= b;
    if (e >>= 1) b *= b;
  }
  return out;
}

Zeta3 MultiPoly::evaluate(const std::array<Zeta3, 4>& point) const {
  Zeta3 acc;
  for (const auto& [m, c] : terms_) {
    Zeta3 v = c;
    for (std::size_t i = 0; i < 4; ++i)
      if (m[i] != 0) v *= zpow(point[i], m[i]);
    acc += v;
  }
  return acc;
}

Int MultiPoly::wdegree(const Monomial& m, const Weight3& w) {
  if (m[3] != 0) throw argument_error("wdegree: weight given for 3 variables only");
  return w.e1 * m[0] + w.e2 * m[1] + w.e3 * m[2];
}

Int MultiPoly::max_wdegree(const Weight3& w) const {
  if (is_zero()) throw argument_error("max_wdegree: zero polynomial");
  Int best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int d = wdegree(m, w);
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

bool MultiPoly::is_whomogeneous(const Weight3& w, Int* degree) const {
  if (is_zero()) return true;
  Int d = wdegree(terms_.begin()->first, w);
  for (const auto& [m, c] : terms_)
    if (wdegree(m, w) != d) return false;
  if (degree) *degree = d;
  return true;
}

namespace {

const char kVarNames[4] = {'x', 'y', 'z', 'w'};

bool graded_lex_before(const Monomial& a, const Monomial& b) {
  std::int64_t ta = a[0] + a[1] + a[2] + a[3];
  std::int64_t tb = b[0] + b[1] + b[2] + b[3];
  if (ta != tb) return ta > tb;
  return a > b;  // higher x-power first
}

std::string coeff_prefix(const Zeta3& c, bool has_monomial) {
  if (!has_monomial) {
    if (c.is_rational() || c.rational_part().is_zero()) return c.str();
    return "(" + c.str() + ")";
  }
  if (c == Zeta3(Rational(1))) return "";
  if (c == Zeta3(Rational(-1))) return "-";
  if (c.is_rational() || c.rational_part().is_zero()) return c.str() + "*";
  return "(" + c.str() + ")*";
}

}  // namespace

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, Zeta3>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return graded_lex_before(a->first, b->first); });

  std::string out;
  for (const auto* t : order) {
    const auto& [m, c] = *t;
    std::string mono;
    for (std::size_t i = 0; i < 4; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += kVarNames[i];
      if (m[i] != 1) mono += "^" + std::to_string(m[i]);
    }
    std::string term = coeff_prefix(c, !mono.empty()) + mono;
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MultiPoly run() {
    MultiPoly p = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw argument_error("parse_poly: " + what + " at position " + std::to_string(pos_) +
                         " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Int parse_uint() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  std::int64_t parse_exponent() {
    bool neg = eat('-');
    Int e = parse_uint();
    if (neg) e = -e;
    if (e < 0) fail("negative exponent on a variable");
    return checked_exp(e);
  }

  MultiPoly parse_expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    MultiPoly acc = parse_term();
    if (neg) acc = -acc;
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += parse_term();
      } else if (c == '-') {
        ++pos_;
        acc -= parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly parse_term() {
    MultiPoly acc = parse_factor();
    while (eat('*')) acc *= parse_factor();
    return acc;
  }

  MultiPoly parse_factor() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = parse_uint();
      if (eat('/')) {
        Int den = parse_uint();
        if (den == 0) fail("zero denominator");
        return MultiPoly::constant(Zeta3(Rational(num, den)));
      }
      if (eat('^')) return MultiPoly::constant(Zeta3(Rational(powi(num, parse_exponent()))));
      return MultiPoly::constant(Zeta3(Rational(num)));
    }
    if (c == '(') {
      ++pos_;
      MultiPoly inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      if (eat('^')) return inner.pow(parse_exponent());
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "zeta") {
        std::int64_t e = 1;
        if (eat('^')) e = parse_exponent();
        return MultiPoly::constant(zpow(Zeta3::zeta(), e));
      }
      int index = -1;
      if (name.size() == 1)
        for (int i = 0; i < 4; ++i)
          if (name[0] == kVarNames[i]) index = i;
      if (index < 0) {
        pos_ = start;
        fail("unknown symbol '" + name + "'");
      }
      std::int64_t e = 1;
      if (eat('^')) e = parse_exponent();
      Monomial m{0, 0, 0, 0};
      m[static_cast<std::size_t>(index)] = e;
      return MultiPoly::monomial(Zeta3(Rational(1)), m, index == 3 ? 4 : 3);
    }
    fail("expected a factor");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text) { return PolyParser(text).run(); }

std::map<Int, MultiPoly> wdegree_decompose(const MultiPoly& f, const Weight3& w) {
  std::map<Int, MultiPoly> out;
  for (const auto& [m, c] : f.terms()) {
    Int d = MultiPoly::wdegree(m, w);
    auto it = out.find(d);
    if (it == out.end()) it = out.emplace(d, MultiPoly(f.nvars())).first;
    it->second.add_term(m, c);
  }
  return out;
}

MultiPoly cremona_push(const MultiPoly& f, const std::array<Int, 3>& alpha,
                       const std::array<Int, 2>& beta) {
  require_cremona_identity(alpha, beta);
  if (f.nvars() != 3) throw argument_error("cremona_push: polynomial must be in x,y,z");
  MultiPoly out(3);
  for (const auto& [m, c] : f.terms()) {
    Monomial t{0, 0, 0, 0};
    t[0] = add_exp(mul_exp(alpha[1], m[1]), mul_exp(beta[0], m[2]));
    t[1] = add_exp(mul_exp(alpha[0], m[0]), mul_exp(beta[1], m[2]));
    t[2] = add_exp(m[0], m[1]);
    out.add_term(t, c);
  }
  return out;
}

std::pair<MultiPoly, Monomial> strip_monomial_factor(const MultiPoly& f) {
  if (f.is_zero()) throw argument_error("strip_monomial_factor: zero polynomial");
  Monomial mins = f.terms().begin()->first;
  for (const auto& [m, c] : f.terms())
    for (std::size_t i = 0; i < 4; ++i) mins[i] = std::min(mins[i], m[i]);
  MultiPoly g(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    Monomial t;
    for (std::size_t i = 0; i < 4; ++i) t[i] = m[i] - mins[i];
    g.add_term(t, c);
  }
  return {g, mins};
}

MultiPoly kummer_pull(const MultiPoly& f, const std::array<Int, 3>& d) {
  for (const Int& v : d)
    if (v < 1) throw argument_error("kummer_pull: cover orders must be positive");
  if (gcd2(d[0], d[1]) != 1 || gcd2(d[0], d[2]) != 1 || gcd2(d[1], d[2]) != 1)
    throw argument_error("kummer_pull: cover orders must be pairwise coprime");
  if (f.nvars() != 3) throw argument_error("kummer_pull: polynomial must be in x,y,z");
  MultiPoly out(3);
  for (const auto& [m, c] : f.terms()) {
    Monomial t{0, 0, 0, 0};
    for (std::size_t i = 0; i < 3; ++i) t[i] = mul_exp(d[i], m[i]);
    out.add_term(t, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

MultiPoly catalog_cubic(const Zeta3& lambda) {
  if (lambda * lambda * lambda != Zeta3(Rational(1)))
    throw argument_error("catalog_cubic: lambda must be a cube root of unity");
  Zeta3 li = lambda * lambda;  // lambda^{-1}
  MultiPoly x = MultiPoly::variable(0), y = MultiPoly::variable(1), z = MultiPoly::variable(2);
  MultiPoly three = MultiPoly::constant(Zeta3(Rational(3)));
  return x.pow(3) + y.pow(3) + z.pow(3) +
         three * x * y * (x.scaled(li) + y.scaled(lambda)) + three * x * z * (x + z) +
         three * y * z * (y.scaled(li) + z.scaled(lambda));
}

MultiPoly catalog_conic() {
  MultiPoly x = MultiPoly::variable(0), y = MultiPoly::variable(1), z = MultiPoly::variable(2);
  MultiPoly two = MultiPoly::constant(Zeta3(Rational(2)));
  return x.pow(2) + y.pow(2) + z.pow(2) - two * (y * z + x * z + x * y);
}

MultiPoly catalog_cremona_conic(const std::array<Int, 3>& alpha, const std::array<Int, 2>& beta) {
  require_cremona_identity(alpha, beta);
  auto e = [](const Int& v) { return checked_exp(v); };
  const std::int64_t a1 = e(alpha[0]), a2 = e(alpha[1]), b1 = e(beta[0]), b2 = e(beta[1]);
  MultiPoly out(3);
  Zeta3 one(Rational(1)), mtwo(Rational(-2));
  out.add_term({0, 2 * a1, 2, 0}, one);
  out.add_term({2 * a2, 0, 2, 0}, one);
  out.add_term({2 * b1, 2 * b2, 0, 0}, one);
  out.add_term({a2, a1, 2, 0}, mtwo);
  out.add_term({b1, add_exp(a1, b2), 1, 0}, mtwo);
  out.add_term({add_exp(a2, b1), b2, 1, 0}, mtwo);
  return out;
}

MultiPoly catalog_kummer_conic(const std::array<Int, 3>& d) {
  return kummer_pull(catalog_conic(), d);
}

std::array<ProjPoint, 3> flex_tangency_points(const Zeta3& lambda) {
  if (lambda * lambda * lambda != Zeta3(Rational(1)))
    throw argument_error("flex_tangency_points: lambda must be a cube root of unity");
  Zeta3 zero, one(Rational(1)), mone(Rational(-1));
  return {ProjPoint{zero, one, -lambda}, ProjPoint{mone, zero, one},
          ProjPoint{one, -lambda, zero}};
}

bool are_collinear(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
  for (const ProjPoint* p : {&p1, &p2, &p3})
    if ((*p)[0].is_zero() && (*p)[1].is_zero() && (*p)[2].is_zero())
      throw argument_error("are_collinear: projective point must be nonzero");
  Zeta3 det = p1[0] * (p2[1] * p3[2] - p2[2] * p3[1]) - p1[1] * (p2[0] * p3[2] - p2[2] * p3[0]) +
              p1[2] * (p2[0] * p3[1] - p2[1] * p3[0]);
  return det.is_zero();
}

}  // namespace wpsing
