#pragma once

#include <compare>
#include <optional>
#include <string>

#include "ordspace/rational.hpp"

namespace ordspace {

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };
enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

inline Sign negate(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline Sign sign_of(int v) { return v > 0 ? Sign::Positive : (v < 0 ? Sign::Negative : Sign::Zero); }
const char* to_string(Sign s);
const char* to_string(Cmp c);

/// Basepoint of a Smirnov-type ordering: a rational pushed infinitesimally to
/// one side, or one of the two infinite ends of the line. Comparison with any
/// rational is strict, so every positivity test it drives is decided exactly.
class OrderParam {
 public:
  enum class Kind { Finite, PlusInfinity, MinusInfinity };
  enum class Side { Below, Above };

  static OrderParam finite(Rational value, Side side) { return OrderParam(Kind::Finite, std::move(value), side); }
  static OrderParam above(Rational value) { return finite(std::move(value), Side::Above); }
  static OrderParam below(Rational value) { return finite(std::move(value), Side::Below); }
  static OrderParam plus_infinity() { return OrderParam(Kind::PlusInfinity, Rational(0), Side::Above); }
  static OrderParam minus_infinity() { return OrderParam(Kind::MinusInfinity, Rational(0), Side::Below); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  /// Only meaningful for finite parameters.
  const Rational& value() const { return value_; }
  Side side() const { return side_; }

  /// Never returns Equal.
  Cmp compare(const Rational& t) const;

  std::string str() const;

  friend bool operator==(const OrderParam& a, const OrderParam& b);
  /// Total order: -inf < (v, Below) < (v, Above) < (w, .) for v < w < +inf.
  friend std::strong_ordering operator<=>(const OrderParam& a, const OrderParam& b);

 private:
  OrderParam(Kind k, Rational v, Side s) : kind_(k), value_(std::move(v)), side_(s) {}

  Kind kind_;
  Rational value_;
  Side side_;
};

}  // namespace ordspace
