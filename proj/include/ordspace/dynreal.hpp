#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ordspace/ball.hpp"
#include "ordspace/ordering.hpp"

namespace ordspace {

struct RealizedPoint {
  Element elem;
  Rational t;
};

/// Points in enumeration order; the first is the identity at 0.
struct RealizationMap {
  std::vector<RealizedPoint> points;
};

/// Inserts the enumeration one element at a time: beyond every earlier point
/// goes to max + 1 (or min - 1), otherwise to the midpoint of its two order
/// neighbours. Throws PreconditionError unless the enumeration starts at the
/// identity, DuplicateElementError and WrongGroupError.
RealizationMap realize(const Ordering& o, const std::vector<Element>& enumeration);

/// The ball's own order (length, then shortlex).
std::vector<Element> ball_enumeration(const Ball& ball);

struct RealizationReport {
  bool order_preserving = true;
  bool equivariant = true;    // t(h) -> t(gh) strictly increasing for each g
  bool sign_recovery = true;  // sign(g) = sign(t(g))
  std::vector<std::string> violations;
  bool ok() const { return order_preserving && equivariant && sign_recovery; }
};

RealizationReport check_realization(const RealizationMap& map, const Ordering& o);

}  // namespace ordspace
