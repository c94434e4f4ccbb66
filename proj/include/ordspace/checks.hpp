#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordspace/ball.hpp"
#include "ordspace/ordering.hpp"

namespace ordspace {

/// One failed instance of an axiom. Witnesses are ball indices.
struct Violation {
  std::string rule;
  std::vector<std::size_t> witness;
};

struct CheckReport {
  std::size_t checked = 0;  // number of instances examined
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Trichotomy, sign(g^-1) = -sign(g), and closure of positives under
/// products, over the whole ball. Stops at the first violation.
CheckReport check_cone_axioms(const Ball& ball, const SignFn& sign);

/// f g^2 > g for all positive f, g in the ball. Reports every violating pair
/// (f, g), sorted by ball index.
CheckReport check_conradian(const Ball& ball, const SignFn& sign);

struct CofinalEntry {
  std::size_t index = 0;
  std::optional<std::int64_t> lower;  // n1 with a^n1 < g
  std::optional<std::int64_t> upper;  // n2 with g < a^n2
  bool bounded() const { return lower && upper; }
};

struct CofinalReport {
  std::int64_t bound = 0;
  std::vector<CofinalEntry> entries;
  bool all_bounded() const;
};

/// For each g, searches |n| <= bound for a^n1 < g < a^n2, where a generates
/// the bottom of the series. Elements with no bracket inside the bound are
/// reported as not found up to the bound.
CofinalReport check_cofinal(const Ball& ball, const SignFn& sign, std::int64_t bound);

struct ConvexityReport {
  std::size_t members = 0;
  /// Ball indices x < g < y with x, y members and g not.
  std::optional<std::array<std::size_t, 3>> witness;
  bool convex() const { return !witness; }
};

/// Convexity of {g in ball : member(g)} inside the ball's order.
ConvexityReport check_convex(const Ball& ball, const SignFn& sign, const std::function<bool(const Element&)>& member);

/// Plain loops over the same definitions, kept as the reference the parallel
/// kernels are tested against.
namespace serial {
CheckReport check_cone_axioms(const Ball& ball, const SignFn& sign);
CheckReport check_conradian(const Ball& ball, const SignFn& sign);
CofinalReport check_cofinal(const Ball& ball, const SignFn& sign, std::int64_t bound);
ConvexityReport check_convex(const Ball& ball, const SignFn& sign, const std::function<bool(const Element&)>& member);
}  // namespace serial

}  // namespace ordspace
