#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordspace/groups.hpp"
#include "ordspace/ordering.hpp"
#include "ordspace/rational.hpp"

namespace ordspace {

/// Ranks-one series G_0 < ... < G_n with scalar actions: the generator of
/// level j conjugates level i by scalars(i, j). Missing entries are 1.
struct SeriesDescriptor {
  int n = 0;
  std::map<std::pair<int, int>, Rational> scalars;

  Rational scalar(int i, int j) const;
  friend bool operator==(const SeriesDescriptor&, const SeriesDescriptor&) = default;
};

/// Consecutive scalars [s(1,2), s(2,3), ...]; n = size + 1.
SeriesDescriptor series_from_consecutive(const std::vector<Rational>& consecutive);
SeriesDescriptor descriptor_of(const Group& g);

struct SeriesValidation {
  bool valid = true;
  std::optional<std::array<int, 3>> triple;
  std::string reason;
};

/// Scalars must be nonzero and, for i < j < k, s(j,k) != 1 forces
/// s(i,j) = +-1.
SeriesValidation validate_series(const SeriesDescriptor& d);

/// Finite(2^n) or infinite (nullopt).
using OrderingCount = std::optional<std::uint64_t>;
OrderingCount count_c_orderings(const SeriesDescriptor& d);
OrderingCount count_left_orderings(const SeriesDescriptor& d);

enum class Verdict { Tararin, FiniteCNoIsolated, InfiniteC };
Verdict verdict(const SeriesDescriptor& d);
const char* to_string(Verdict v);

/// Z[1/m] carrying level i: m is the product of |num * den| over the
/// scalars acting on that level.
mpz_class level_ring(const SeriesDescriptor& d, int level);

enum class EnumKind { Conradian, Left };

/// All 2^n lexicographic orderings, sign vectors in binary order with +
/// before -. Throws InfiniteFamilyError naming the failing quotient.
std::vector<Ordering> enum_orderings(const Group& g, EnumKind kind);

}  // namespace ordspace
