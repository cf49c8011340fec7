#include "wpsing/fpgroup.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "wpsing/matrix.hpp"

namespace wpsing {

namespace {

std::int64_t to_i64_exp(const Int& e) {
  if (e > std::numeric_limits<std::int64_t>::max() || e < std::numeric_limits<std::int64_t>::min())
    throw argument_error("group word: exponent too large");
  return e.convert_to<std::int64_t>();
}

}  // namespace

Word Word::from_factors(std::vector<GenPower> factors) {
  Word w;
  for (GenPower f : factors) {
    if (f.exp == 0) continue;
    if (!w.factors_.empty() && w.factors_.back().gen == f.gen) {
      w.factors_.back().exp += f.exp;
      if (w.factors_.back().exp == 0) w.factors_.pop_back();
    } else {
      w.factors_.push_back(f);
    }
  }
  return w;
}

Word Word::generator(int gen, std::int64_t exp) { return from_factors({{gen, exp}}); }

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const GenPower& f : factors_) n += f.exp < 0 ? -f.exp : f.exp;
  return n;
}

Word Word::inverse() const {
  std::vector<GenPower> rev(factors_.rbegin(), factors_.rend());
  for (GenPower& f : rev) f.exp = -f.exp;
  return from_factors(std::move(rev));
}

Word Word::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Word out;
  for (std::int64_t i = 0; i < e; ++i) out = out * *this;
  return out;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<GenPower> all = a.factors_;
  all.insert(all.end(), b.factors_.begin(), b.factors_.end());
  return Word::from_factors(std::move(all));
}

Word Word::commutator(const Word& a, const Word& b) {
  return a.inverse() * b.inverse() * a * b;
}

Word Word::conjugate(const Word& a, const Word& b) { return b.inverse() * a * b; }

std::vector<int> Word::letters() const {
  std::vector<int> out;
  for (const GenPower& f : factors_) {
    int col = f.exp > 0 ? 2 * f.gen : 2 * f.gen + 1;
    std::int64_t n = f.exp > 0 ? f.exp : -f.exp;
    for (std::int64_t i = 0; i < n; ++i) out.push_back(col);
  }
  return out;
}

GroupPresentation::GroupPresentation(std::vector<std::string> generators,
                                     std::vector<Word> relators)
    : gens_(std::move(generators)), relators_(std::move(relators)) {
  for (const Word& r : relators_)
    for (const GenPower& f : r.factors())
      if (f.gen < 0 || f.gen >= ngens())
        throw argument_error("GroupPresentation: relator uses unknown generator");
}

std::string GroupPresentation::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const GenPower& f : w.factors()) {
    if (!out.empty()) out += '*';
    out += gens_[static_cast<std::size_t>(f.gen)];
    if (f.exp != 1) out += "^" + std::to_string(f.exp);
  }
  return out;
}

std::string GroupPresentation::str() const {
  std::string out = "< ";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (i) out += ", ";
    out += word_str(relators_[i]);
  }
  out += " >";
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const std::vector<std::string>& gens)
      : text_(text), gens_(gens) {}

  Word parse_full() {
    Word w = parse_word();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return w;
  }

  Word parse_word() {
    Word acc = parse_factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * parse_factor();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '[') {
        acc = acc * parse_factor();
      } else {
        break;
      }
    }
    return acc;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw argument_error("parse word: " + what + " at position " + std::to_string(pos_) +
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

  std::int64_t parse_int() {
    skip_ws();
    bool neg = eat('-');
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    std::int64_t v = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      v = v * 10 + (text_[i] - '0');
      if (v > (std::int64_t{1} << 40)) fail("exponent too large");
    }
    return neg ? -v : v;
  }

  Word parse_factor() {
    char c = peek();
    Word base;
    if (c == '(') {
      ++pos_;
      base = parse_word();
      if (!eat(')')) fail("expected ')'");
    } else if (c == '[') {
      ++pos_;
      Word a = parse_word();
      if (!eat(',')) fail("expected ',' in commutator");
      Word b = parse_word();
      if (!eat(']')) fail("expected ']'");
      base = Word::commutator(a, b);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(gens_.begin(), gens_.end(), name);
      if (it == gens_.end()) {
        pos_ = start;
        fail("unknown generator '" + name + "'");
      }
      base = Word::generator(static_cast<int>(it - gens_.begin()));
    } else {
      fail("expected a factor");
    }
    if (eat('^')) return base.pow(parse_int());
    return base;
  }

  std::string_view text_;
  const std::vector<std::string>& gens_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
  return WordParser(text, generators).parse_full();
}

GroupPresentation parse_presentation(std::string_view text) {
  auto lt = text.find('<');
  auto bar = text.find('|');
  auto gt = text.rfind('>');
  if (lt == std::string_view::npos || bar == std::string_view::npos ||
      gt == std::string_view::npos || !(lt < bar && bar < gt))
    throw argument_error("parse_presentation: expected '< gens | relators >'");

  std::vector<std::string> gens;
  {
    std::string_view names = text.substr(lt + 1, bar - lt - 1);
    std::string cur;
    auto flush = [&] {
      if (!cur.empty()) {
        gens.push_back(cur);
        cur.clear();
      }
    };
    for (char c : names) {
      if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
        flush();
      else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
        cur += c;
      else
        throw argument_error(std::string("parse_presentation: bad character '") + c +
                             "' in generator list");
    }
    flush();
  }
  if (gens.empty()) throw argument_error("parse_presentation: no generators");
  for (const std::string& g : gens)
    if (std::count(gens.begin(), gens.end(), g) > 1)
      throw argument_error("parse_presentation: duplicate generator '" + g + "'");

  std::vector<Word> relators;
  std::string_view rels = text.substr(bar + 1, gt - bar - 1);
  // Split on commas at bracket depth zero; commas inside [.,.] belong to the
  // commutator syntax.
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= rels.size(); ++i) {
    if (i < rels.size() && (rels[i] == '[' || rels[i] == '(')) ++depth;
    if (i < rels.size() && (rels[i] == ']' || rels[i] == ')')) --depth;
    if (i == rels.size() || (rels[i] == ',' && depth == 0)) {
      std::string_view piece = rels.substr(start, i - start);
      bool blank = true;
      for (char c : piece)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (!blank) relators.push_back(parse_word(piece, gens));
      start = i + 1;
    }
  }
  return GroupPresentation(std::move(gens), std::move(relators));
}

// ---------------------------------------------------------------------------
// Abelianization

Int AbelianInvariants::order() const {
  if (!finite()) throw state_error("abelianization is infinite");
  Int n = 1;
  for (const Int& t : torsion) n *= t;
  return n;
}

bool AbelianInvariants::is_cyclic_of_order(const Int& n) const {
  if (free_rank != 0) return false;
  if (n == 1) return torsion.empty();
  return torsion.size() == 1 && torsion[0] == n;
}

std::string AbelianInvariants::str() const {
  std::string out;
  if (free_rank > 0) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const Int& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.str();
  }
  return out.empty() ? "1" : out;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
  const std::size_t r = p.relators().size();
  const std::size_t g = static_cast<std::size_t>(p.ngens());
  IntMatrix m(r, g);
  for (std::size_t i = 0; i < r; ++i)
    for (const GenPower& f : p.relators()[i].factors())
      m.at(i, static_cast<std::size_t>(f.gen)) += f.exp;
  std::vector<Int> factors = smith_normal_form(std::move(m));
  AbelianInvariants out;
  std::size_t nonzero = 0;
  for (const Int& d : factors)
    if (d != 0) {
      ++nonzero;
      if (d > 1) out.torsion.push_back(d);
    }
  out.free_rank = static_cast<int>(g - nonzero);
  return out;
}

// ---------------------------------------------------------------------------
// Quotient search in the symmetric group on 3 letters

namespace {

// Permutations of {0,1,2} in one-line notation.
constexpr int kS3[6][3] = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};

int s3_mul(int a, int b) {
  int c[3];
  for (int i = 0; i < 3; ++i) c[i] = kS3[a][kS3[b][i]];
  for (int k = 0; k < 6; ++k)
    if (kS3[k][0] == c[0] && kS3[k][1] == c[1] && kS3[k][2] == c[2]) return k;
  return -1;
}

int s3_inv(int a) {
  for (int k = 0; k < 6; ++k)
    if (s3_mul(a, k) == 0) return k;
  return -1;
}

int s3_pow(int a, std::int64_t e) {
  if (e < 0) return s3_pow(s3_inv(a), -e);
  int out = 0;
  for (std::int64_t i = 0; i < e % 6; ++i) out = s3_mul(out, a);
  // element orders divide 6, so reducing the exponent mod 6 is safe
  return out;
}

}  // namespace

int count_epimorphisms_to_s3(const GroupPresentation& p) {
  const int n = p.ngens();
  if (n > 6) throw argument_error("count_epimorphisms_to_s3: too many generators");
  int count = 0;
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  for (;;) {
    bool ok = true;
    for (const Word& r : p.relators()) {
      int v = 0;
      for (const GenPower& f : r.factors())
        v = s3_mul(v, s3_pow(img[static_cast<std::size_t>(f.gen)], f.exp));
      if (v != 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      // image subgroup must be all of S3
      bool in[6] = {true, false, false, false, false, false};
      bool grew = true;
      while (grew) {
        grew = false;
        for (int a = 0; a < 6; ++a)
          if (in[a])
            for (int i = 0; i < n; ++i) {
              int b = s3_mul(a, img[static_cast<std::size_t>(i)]);
              if (!in[b]) {
                in[b] = true;
                grew = true;
              }
            }
      }
      bool full = true;
      for (bool v : in) full = full && v;
      if (full) ++count;
    }
    int i = 0;
    while (i < n && ++img[static_cast<std::size_t>(i)] == 6) img[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return count;
}

Int milnor_fiber_order(const std::array<Int, 3>& alpha, const std::array<Int, 2>& beta) {
  require_cremona_identity(alpha, beta);
  return gcd2(alpha[0] + 2 * beta[1], alpha[1] + 2 * beta[0]);
}

// ---------------------------------------------------------------------------
// Builders

namespace {

Word gw(int g, std::int64_t e = 1) { return Word::generator(g, e); }

}  // namespace

GroupPresentation sextic_tangent_lines_group() {
  // generators: c (cubic), lx, ly, lz (the lines)
  const int c = 0, lx = 1, ly = 2, lz = 3;
  std::vector<Word> rel = {
      Word::commutator(gw(lx), gw(ly)),
      Word::commutator(gw(ly), gw(lz)),
      Word::commutator(gw(lz), gw(lx)),
      Word::commutator(gw(c), gw(lx, -1) * gw(lz)),
      Word::commutator(gw(c), gw(ly, -1) * gw(lz)),
      gw(c) * gw(lx) * gw(c) * gw(ly) * gw(c) * gw(lz),
  };
  return GroupPresentation({"c", "lx", "ly", "lz"}, std::move(rel));
}

GroupPresentation cubic_quotient_group(const std::array<Int, 3>& alpha,
                                       const std::array<Int, 2>& beta) {
  require_cremona_identity(alpha, beta);
  GroupPresentation base = sextic_tangent_lines_group();
  const int lx = 1, ly = 2, lz = 3;
  std::vector<Word> rel = base.relators();
  rel.push_back(gw(lx) * gw(ly));
  rel.push_back(gw(lx, to_i64_exp(alpha[0])) * gw(lz, to_i64_exp(beta[1])));
  rel.push_back(gw(ly, to_i64_exp(alpha[1])) * gw(lz, to_i64_exp(beta[0])));
  return GroupPresentation(base.generators(), std::move(rel));
}

GroupPresentation cubic_quotient_two_generator(const std::array<Int, 3>& alpha,
                                               const std::array<Int, 2>& beta) {
  require_cremona_identity(alpha, beta);
  // h1, h2 with alpha2 h1 - alpha1 h2 = 1
  auto bez = extended_gcd(alpha[1], alpha[0]);
  Int h1 = bez.x, h2 = -bez.y;
  Int a = alpha[0] * alpha[1] + alpha[2];
  Int twist = h1 * beta[1] + h2 * beta[0] - 1;
  const int l = 0, u = 1;
  std::vector<Word> rel = {
      gw(l, to_i64_exp(a)),
      Word::commutator(gw(u), gw(l, to_i64_exp(twist))),
      gw(u, 3) * gw(l, -2),
  };
  return GroupPresentation({"l", "u"}, std::move(rel));
}

GroupPresentation odd_case_group(const Int& a) {
  if (a < 1) throw argument_error("odd_case_group: order must be positive");
  std::vector<Word> rel = {gw(0, to_i64_exp(a)), gw(1, 3) * gw(0, -2)};
  return GroupPresentation({"l", "u"}, std::move(rel));
}

GroupPresentation conic_tangent_lines_group() {
  // generators: u (= c*lz), lx, ly, lz
  const int u = 0, lx = 1, ly = 2, lz = 3;
  std::vector<Word> rel = {
      Word::commutator(gw(lx), gw(ly)),
      Word::commutator(gw(lx), gw(lz)),
      Word::commutator(Word::conjugate(gw(ly), gw(u)), gw(lz)),
      gw(u) * gw(ly) * gw(u) * gw(lx) * gw(lz, -1),
  };
  return GroupPresentation({"u", "lx", "ly", "lz"}, std::move(rel));
}

GroupPresentation conic_quotient_group(const std::array<Int, 3>& alpha,
                                       const std::array<Int, 2>& beta) {
  require_cremona_identity(alpha, beta);
  GroupPresentation base = conic_tangent_lines_group();
  const int u = 0, lx = 1, ly = 2, lz = 3;
  std::vector<Word> rel = base.relators();
  rel.push_back(gw(lx) * gw(ly));
  rel.push_back(gw(lx, to_i64_exp(alpha[0])) * gw(lz, to_i64_exp(beta[1])));
  rel.push_back(gw(u, -1) * gw(ly, to_i64_exp(alpha[1])) * gw(u) * gw(lz, to_i64_exp(beta[0])));
  return GroupPresentation(base.generators(), std::move(rel));
}

GroupPresentation conic_quotient_two_generator(const std::array<Int, 3>& alpha,
                                               const std::array<Int, 2>& beta) {
  require_cremona_identity(alpha, beta);
  const int u = 0, lx = 1;
  std::int64_t a1 = to_i64_exp(alpha[0]), a2 = to_i64_exp(alpha[1]);
  std::int64_t b1 = to_i64_exp(beta[0]), b2 = to_i64_exp(beta[1]);
  Word conj = gw(u) * gw(lx) * gw(u, -1);  // u lx u^-1
  std::vector<Word> rel = {
      Word::commutator(gw(lx), gw(u, 2)),
      Word::commutator(gw(lx), conj),
      gw(u, 2 * b2) * gw(lx, a1 + b2) * conj.pow(-b2),
      gw(u, 2 * b1) * conj.pow(-(a2 + b1)) * gw(lx, b1),
  };
  return GroupPresentation({"u", "lx"}, std::move(rel));
}

GroupPresentation orbifold_group(const Int& d1, const Int& d2, const Int& d3) {
  if (d1 < 1 || d2 < 1 || d3 < 1) throw argument_error("orbifold_group: orders must be positive");
  if (gcd2(d1, d2) != 1 || gcd2(d1, d3) != 1 || gcd2(d2, d3) != 1)
    throw argument_error("orbifold_group: orders must be pairwise coprime");
  GroupPresentation base = conic_tangent_lines_group();
  const int lx = 1, ly = 2, lz = 3;
  std::vector<Word> rel = base.relators();
  rel.push_back(gw(lx, to_i64_exp(d1)));
  rel.push_back(gw(ly, to_i64_exp(d2)));
  rel.push_back(gw(lz, to_i64_exp(d3)));
  return GroupPresentation(base.generators(), std::move(rel));
}

GroupPresentation triangle_group(const Int& p, const Int& q, const Int& r) {
  if (p < 1 || q < 1 || r < 1) throw argument_error("triangle_group: orders must be positive");
  std::vector<Word> rel = {
      gw(0, to_i64_exp(p)),
      gw(1, to_i64_exp(q)),
      gw(2, to_i64_exp(r)),
      gw(2) * gw(1) * gw(0),
  };
  return GroupPresentation({"m1", "m2", "m3"}, std::move(rel));
}

GroupPresentation quartic_four_cusps_group() {
  const int s = 0, t = 1, u = 2;
  auto braid = [](int a, int b) {
    return gw(a) * gw(b) * gw(a) * gw(b, -1) * gw(a, -1) * gw(b, -1);
  };
  std::vector<Word> rel = {
      braid(s, t),
      braid(s, u),
      braid(t, u),
      (gw(s) * gw(t) * gw(u)).pow(2),
  };
  return GroupPresentation({"s", "t", "u"}, std::move(rel));
}

}  // namespace wpsing
