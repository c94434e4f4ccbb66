#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "ordspace/affine.hpp"
#include "ordspace/groups.hpp"
#include "ordspace/order_param.hpp"

namespace ordspace {

using SignFn = std::function<Sign(const Element&)>;

/// A left-ordering given by its sign function on a group. Cheap to copy; the
/// descriptor tree is shared and immutable.
class Ordering {
 public:
  enum class Kind { ConradLex, TararinLex, Smirnov, Reverse, Extension, Quotient, Restrict };

  Kind kind() const;
  const Group& group() const;

  /// ConradLex / TararinLex: one sign per series level, highest level first.
  const std::vector<int>& signs() const;
  const OrderParam& param() const;
  /// Reverse, Quotient, Restrict: the ordering this one is derived from.
  const Ordering& inner() const;
  /// Extension parts.
  const Ordering& quotient_part() const;
  const Ordering& sub_part() const;
  /// Series level for Extension, Quotient, Restrict.
  int level() const;

  /// Throws WrongGroupError for foreign elements (and, for Restrict, for
  /// elements outside the subgroup).
  Sign sign(const Element& x) const;
  /// Less iff x^-1 y is positive.
  Cmp compare(const Element& x, const Element& y) const;
  bool less(const Element& x, const Element& y) const { return compare(x, y) == Cmp::Less; }
  SignFn sign_fn() const;

  /// Structural equality of descriptors.
  friend bool operator==(const Ordering& a, const Ordering& b);

  struct Node;

 private:
  explicit Ordering(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  friend Ordering make_node(Node n);

  std::shared_ptr<const Node> node_;
};

/// Lexicographic ordering read off the rational series; signs are +-1,
/// highest level first. Throws LengthMismatchError.
Ordering make_conrad_lex(const Group& g, std::vector<int> signs);
/// As make_conrad_lex but for towers, where these are all left-orderings.
Ordering make_tararin_lex(const Group& g, std::vector<int> signs);
/// Positive cone {g : phi(g)(eps) > eps} for F1 and B(1,3).
Ordering make_smirnov(const Group& g, OrderParam eps);
Ordering make_reverse(const Ordering& o);
/// Quotient ordering on G/G_level first, then sub on G_level. sub is an
/// ordering on G that is only consulted on G_level.
Ordering make_extension(const Ordering& quotient, const Ordering& sub, int level);
/// The induced ordering on G_level (partial on G).
Ordering restrict_order(const Ordering& o, int level);
/// Induced ordering on G/G_level. Assumes G_level is convex in o.
Ordering make_quotient(const Ordering& o, int level);
/// make_quotient after checking convexity of G_level inside ball(radius).
/// Throws NonConvexSubgroupError with a witness triple.
Ordering quotient_order(const Ordering& o, int level, int radius);

/// Sign of phi at eps: positive iff phi(eps) > eps, with the side of a
/// finite parameter deciding fixed points by the slope.
Sign affine_sign(const AffineMap& phi, const OrderParam& eps);

/// beta / ((r - 1) alpha). Throws DivisionByZeroError.
Rational affine_to_param(const Rational& alpha, const Rational& beta, const Rational& r);

}  // namespace ordspace
