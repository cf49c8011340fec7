#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wpsing/weight.hpp"

namespace wpsing {

struct GenPower {
  int gen = 0;
  std::int64_t exp = 0;
  friend bool operator==(const GenPower&, const GenPower&) = default;
};

// Freely reduced word over a free group: adjacent factors use distinct
// generators and no factor has exponent zero.
class Word {
 public:
  Word() = default;
  static Word from_factors(std::vector<GenPower> factors);
  static Word generator(int gen, std::int64_t exp = 1);

  const std::vector<GenPower>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::int64_t length() const;

  Word inverse() const;
  Word pow(std::int64_t e) const;
  friend Word operator*(const Word& a, const Word& b);

  // [a, b] = a^-1 b^-1 a b
  static Word commutator(const Word& a, const Word& b);
  // b^-1 a b
  static Word conjugate(const Word& a, const Word& b);

  // One entry per letter; generator g maps to column 2g, its inverse to 2g+1.
  std::vector<int> letters() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<GenPower> factors_;
};

class GroupPresentation {
 public:
  GroupPresentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const { return gens_; }
  const std::vector<Word>& relators() const { return relators_; }
  int ngens() const { return static_cast<int>(gens_.size()); }

  std::string word_str(const Word& w) const;
  std::string str() const;

 private:
  std::vector<std::string> gens_;
  std::vector<Word> relators_;
};

// Grammar: "< a, b | a^2, b^3, (a*b)^5, [a,b] >"; inverses as ^-1,
// commutator brackets expand to a^-1 b^-1 a b.
GroupPresentation parse_presentation(std::string_view text);
Word parse_word(std::string_view text, const std::vector<std::string>& generators);

// Torsion factors (> 1, divisibility chain) and free rank of the
// abelianization, from the Smith normal form of the exponent-sum matrix.
struct AbelianInvariants {
  std::vector<Int> torsion;
  int free_rank = 0;

  bool finite() const { return free_rank == 0; }
  Int order() const;  // state_error when infinite
  bool is_cyclic_of_order(const Int& n) const;
  std::string str() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

AbelianInvariants abelianization(const GroupPresentation& p);

// Exhaustive count of surjections onto the symmetric group on 3 letters.
// Requires at most 6 generators.
int count_epimorphisms_to_s3(const GroupPresentation& p);

// gcd(a1 + 2 b2, a2 + 2 b1); the Cremona identity must hold.
Int milnor_fiber_order(const std::array<Int, 3>& alpha, const std::array<Int, 2>& beta);

// --- presentation builders ------------------------------------------------

// Complement of a smooth cubic plus three tangent lines at aligned flexes.
GroupPresentation sextic_tangent_lines_group();
// Quotient killing the three exceptional meridians of the weighted Cremona map.
GroupPresentation cubic_quotient_group(const std::array<Int, 3>& alpha,
                                       const std::array<Int, 2>& beta);
// Same group on two generators; keeps the commutation relator whose parity
// decides abelianness.
GroupPresentation cubic_quotient_two_generator(const std::array<Int, 3>& alpha,
                                               const std::array<Int, 2>& beta);
// <l, u | l^A, u^3 l^-2>, the non-abelian branch.
GroupPresentation odd_case_group(const Int& a);
// Complement of a smooth conic plus three tangent lines.
GroupPresentation conic_tangent_lines_group();
GroupPresentation conic_quotient_group(const std::array<Int, 3>& alpha,
                                       const std::array<Int, 2>& beta);
GroupPresentation conic_quotient_two_generator(const std::array<Int, 3>& alpha,
                                               const std::array<Int, 2>& beta);
// Conic-and-lines group with meridians of the lines killed to given orders.
GroupPresentation orbifold_group(const Int& d1, const Int& d2, const Int& d3);
GroupPresentation triangle_group(const Int& p, const Int& q, const Int& r);
// Degree-6 rational curve with four ordinary cusps in the plane of weight (1,1,2).
GroupPresentation quartic_four_cusps_group();

}  // namespace wpsing
