#pragma once

#include <optional>
#include <string>

#include "ordspace/rational.hpp"

namespace ordspace {

/// Orientation-preserving affine map x -> slope * x + shift.
class AffineMap {
 public:
  AffineMap() = default;
  /// Throws PreconditionError unless slope > 0.
  AffineMap(Rational slope, Rational shift);

  static AffineMap identity() { return {}; }
  static AffineMap translation(Rational t) { return AffineMap(Rational(1), std::move(t)); }
  static AffineMap dilation(Rational r) { return AffineMap(std::move(r), Rational(0)); }

  const Rational& slope() const { return slope_; }
  const Rational& shift() const { return shift_; }
  bool is_identity() const;

  Rational apply(const Rational& x) const { return slope_ * x + shift_; }
  Rational operator()(const Rational& x) const { return apply(x); }

  /// The unique fixed point, if slope != 1.
  std::optional<Rational> fixed_point() const;

  std::string str() const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;

 private:
  Rational slope_{1};
  Rational shift_{0};
};

/// f o g.
AffineMap compose(const AffineMap& f, const AffineMap& g);
AffineMap invert(const AffineMap& m);

}  // namespace ordspace
