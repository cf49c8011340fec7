#pragma once

#include <string>
#include <string_view>

#include "wpsing/plumbing.hpp"

namespace wpsing {

// Cyclic quotient surface singularity 1/d(a,b). Exponents are reduced mod d
// at construction; the action must be faithful (gcd(d,a,b) = 1). d = 1 is a
// smooth point.
struct CyclicQuotient {
  Int d, a, b;

  CyclicQuotient(Int d_, Int a_, Int b_);

  bool smooth() const { return d == 1; }
  std::string str() const;
  static CyclicQuotient parse(std::string_view text);

  friend bool operator==(const CyclicQuotient&, const CyclicQuotient&) = default;
};

// Canonical form 1/d(1,q) with q in [1,d) coprime to d; the smooth point is
// stored as d = 1, q = 0.
struct NormalizedQuotient {
  Int d, q;

  std::string str() const;
  friend bool operator==(const NormalizedQuotient&, const NormalizedQuotient&) = default;
};

// Divides out gcd(d,b), then gcd(d,a), then scales by a^{-1} mod d.
NormalizedQuotient normalize(const CyclicQuotient& s);

// Minimal resolution: a chain of rational curves with self-intersections
// -b_i from hj_expansion(d, q). Requires d >= 2.
PlumbingGraph resolve_bamboo(const NormalizedQuotient& s);

// Group order of the normalized quotient; equals det(-A) of the resolution
// bamboo for d >= 2 and 1 for a smooth point.
Int order(const CyclicQuotient& s);

}  // namespace wpsing
