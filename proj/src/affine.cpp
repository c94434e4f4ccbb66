#include "ordspace/affine.hpp"

#include "ordspace/error.hpp"

namespace ordspace {

AffineMap::AffineMap(Rational slope, Rational shift) : slope_(std::move(slope)), shift_(std::move(shift)) {
  if (slope_.sign() <= 0) throw PreconditionError("affine slope must be positive, got " + slope_.str());
}

bool AffineMap::is_identity() const { return slope_ == 1 && shift_.is_zero(); }

std::optional<Rational> AffineMap::fixed_point() const {
  if (slope_ == 1) return std::nullopt;
  return shift_ / (Rational(1) - slope_);
}

std::string AffineMap::str() const { return slope_.str() + "*x + " + shift_.str(); }

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  return AffineMap(f.slope() * g.slope(), f.slope() * g.shift() + f.shift());
}

AffineMap invert(const AffineMap& m) {
  Rational inv = m.slope().inverse();
  return AffineMap(inv, -(m.shift() * inv));
}

}  // namespace ordspace
