#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ordspace/affine.hpp"
#include "ordspace/rational.hpp"

namespace ordspace {

// ---------------------------------------------------------------------------
// Group families
//
//  F1     <a, b | b a' b^-1 = a'^r for a' in G1>, G1 rank-one; stored with r > 1.
//  Tower  a_n ... a_1 with a_j a_i a_j^-1 = a_i^{sigma(i,j)}, sigma = +-1.
//  BS13   B(1,3) = <b, c | c b c^-1 = b^3>, as the affine maps 3^k x + t.
//  Gn     G(n) = Z[1/|n|] x| B(1,3) with character chi.
// ---------------------------------------------------------------------------

struct F1Group {
  Rational r;          // normalized, r > 1
  mpz_class m;         // coefficient ring Z[1/m], m = p*q
  bool inverted = false;  // true when the user's b is the internal b^-1
  friend bool operator==(const F1Group&, const F1Group&) = default;
};

struct TowerGroup {
  int n = 0;
  std::vector<int> sigma;  // n*n, sigma[(i-1)*n + (j-1)] for i < j
  int sign(int i, int j) const { return sigma[static_cast<std::size_t>((i - 1) * n + (j - 1))]; }
  friend bool operator==(const TowerGroup&, const TowerGroup&) = default;
};

struct BS13Group {
  friend bool operator==(const BS13Group&, const BS13Group&) = default;
};

struct GnGroup {
  std::int64_t n = 1;
  friend bool operator==(const GnGroup&, const GnGroup&) = default;
};

/// b^k a^s with s in Z[1/m] (internal, normalized coordinates).
struct F1Elem {
  std::int64_t k = 0;
  Rational s;
  friend bool operator==(const F1Elem&, const F1Elem&) = default;
};

/// a_n^{e_n} ... a_1^{e_1}; exps[0] is e_1.
struct TowerElem {
  std::vector<std::int64_t> exps;
  friend bool operator==(const TowerElem&, const TowerElem&) = default;
};

struct BS13Elem {
  AffineMap map;
  friend bool operator==(const BS13Elem&, const BS13Elem&) = default;
};

/// a^s . g with g in B(1,3) (the split normal form of G(n)).
struct GnElem {
  Rational s;
  AffineMap g;
  friend bool operator==(const GnElem&, const GnElem&) = default;
};

using Element = std::variant<F1Elem, TowerElem, BS13Elem, GnElem>;

struct ElementHash {
  std::size_t operator()(const Element& e) const;
};

enum class Family { F1, Tower, BS13, Gn };

struct Letter {
  int gen = 0;
  std::int64_t exp = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

class Group {
 public:
  /// r > 0, r != 1; r < 1 is normalized by swapping b and b^-1.
  static Group f1(const Rational& r);
  /// signs maps (i, j), 1 <= i < j <= n, to +-1; missing pairs act trivially.
  static Group tower(int n, const std::map<std::pair<int, int>, int>& signs = {});
  static Group klein() { return tower(2, {{{1, 2}, -1}}); }
  static Group bs13();
  static Group gn(std::int64_t n);

  Family family() const;
  const F1Group& as_f1() const;
  const TowerGroup& as_tower() const;
  const GnGroup& as_gn() const;

  Element identity() const;
  Element multiply(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  Element power(const Element& x, std::int64_t e) const;
  bool is_identity(const Element& x) const { return x == identity(); }

  /// True if x has the representation of this group's elements.
  bool contains(const Element& x) const;
  /// Throws WrongGroupError unless contains(x).
  void require(const Element& x) const;

  const std::vector<std::string>& generator_names() const { return names_; }
  int generator_count() const { return static_cast<int>(names_.size()); }
  Element generator_power(int gen, std::int64_t e) const;

  /// Length of the rational series G_0 < G_1 < ... < G_n = G.
  int series_length() const;
  /// Signs of the series coordinates, highest level first.
  std::vector<int> lex_signs(const Element& x) const;
  /// Membership in the series level G_level (0 <= level <= series_length()).
  bool in_level(const Element& x, int level) const;
  /// G / G_level, for 1 <= level < series_length().
  Group quotient(int level) const;
  Element project(const Element& x, int level) const;
  /// A section of project(): an element of G mapping onto q.
  Element lift(const Element& q, int level) const;

  /// F1 and B(1,3) act faithfully by affine maps of the line.
  bool is_affine() const;
  AffineMap affine_image(const Element& x) const;
  /// The G_1 element acting as x -> x + t; t must lie in Z[1/ring_base()].
  Element translation(const Rational& t) const;
  /// The generator acting as x -> r x (r > 1).
  Element dilation() const;
  /// G_1 is Z[1/m] for m = ring_base(); m = 1 means G_1 = Z.
  mpz_class ring_base() const;
  /// Generator of G_1 (a, a1, or b for B(1,3)).
  Element g1_generator() const;

  /// Normal-form word, e.g. "b a^-6" or "a^{13/4}". "id" for the identity.
  std::string element_string(const Element& x) const;
  std::string str() const;

  friend bool operator==(const Group& a, const Group& b) { return a.g_ == b.g_; }

 private:
  using Variant = std::variant<F1Group, TowerGroup, BS13Group, GnGroup>;
  explicit Group(Variant g);

  Variant g_;
  std::vector<std::string> names_;
};

/// Parses whitespace-separated tokens "gen" or "gen^exp" (exp an integer).
/// Throws ParseError or UnknownGeneratorError.
Word parse_word(const Group& g, std::string_view text);
Element eval_word(const Group& g, const Word& w);
inline Element eval_word(const Group& g, std::string_view text) { return eval_word(g, parse_word(g, text)); }
std::string word_string(const Group& g, const Word& w);

/// Exponent k of the slope 3^k of a B(1,3) map.
std::int64_t slope_exponent(const AffineMap& m);

/// Character of B(1,3) on G_1 of G(n): n^k * (-1)^u for 3^k x + u/3^v.
Rational chi(const BS13Elem& g, std::int64_t n);

bool member_G1(const Group& g, const Element& x);
/// H(n, k) = <a, c b^k>: the elements whose B(1,3) part fixes -3k/2.
bool member_Hnk(const Group& g, std::int64_t k, const Element& x);

}  // namespace ordspace
