#include "wpsing/quotient.hpp"

#include <cctype>

namespace wpsing {

namespace {

Int reduce_mod(Int x, const Int& d) {
  x %= d;
  if (x < 0) x += d;
  return x;
}

}  // namespace

CyclicQuotient::CyclicQuotient(Int d_, Int a_, Int b_) : d(std::move(d_)) {
  if (d < 1) throw argument_error("CyclicQuotient: order must be positive");
  a = reduce_mod(std::move(a_), d);
  b = reduce_mod(std::move(b_), d);
  if (gcd_many({d, a, b}) != 1)
    throw argument_error("CyclicQuotient: action is not faithful, gcd(d,a,b) != 1");
}

std::string CyclicQuotient::str() const {
  return "1/" + d.str() + "(" + a.str() + "," + b.str() + ")";
}

CyclicQuotient CyclicQuotient::parse(std::string_view text) {
  // Accepted shape: 1/d(a,b) with optional whitespace, signed exponents.
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw argument_error("CyclicQuotient: expected '" + std::string(1, c) + "' at position " +
                           std::to_string(pos) + " in '" + std::string(text) + "'");
    ++pos;
  };
  auto read_int = [&]() -> Int {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw argument_error("CyclicQuotient: expected integer at position " +
                           std::to_string(start) + " in '" + std::string(text) + "'");
    return Int(std::string(text.substr(start, pos - start)));
  };

  expect('1');
  expect('/');
  Int d = read_int();
  expect('(');
  Int a = read_int();
  expect(',');
  Int b = read_int();
  expect(')');
  skip_ws();
  if (pos != text.size())
    throw argument_error("CyclicQuotient: trailing characters in '" + std::string(text) + "'");
  return CyclicQuotient(std::move(d), std::move(a), std::move(b));
}

std::string NormalizedQuotient::str() const {
  return "1/" + d.str() + "(1," + q.str() + ")";
}

NormalizedQuotient normalize(const CyclicQuotient& s) {
  Int d = s.d, a = s.a, b = s.b;
  // 1/d(a,b) = 1/(d/g)(a, b/g) for g = gcd(d,b), then symmetrically in a.
  Int g = gcd2(d, b);
  if (g > 1) {
    d /= g;
    b /= g;
    a %= d;
  }
  g = gcd2(d, a);
  if (g > 1) {
    d /= g;
    a /= g;
    b %= d;
  }
  if (d == 1) return {1, 0};
  Int q = (b * mod_inverse(a, d)) % d;
  return {d, q};
}

PlumbingGraph resolve_bamboo(const NormalizedQuotient& s) {
  if (s.d < 2) throw argument_error("resolve_bamboo: smooth point has no resolution bamboo");
  return PlumbingGraph::bamboo(hj_expansion(s.d, s.q));
}

Int order(const CyclicQuotient& s) { return normalize(s).d; }

}  // namespace wpsing
