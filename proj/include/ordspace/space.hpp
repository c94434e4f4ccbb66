#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ordspace/ball.hpp"
#include "ordspace/ordering.hpp"

namespace ordspace {

/// First ball radius at which two orderings disagree, or AtLeast(max_radius)
/// when they agree on the whole ball.
struct AgreementResult {
  int max_radius = 0;
  std::optional<int> radius;
  std::optional<std::size_t> witness;  // index into the ball
  std::string witness_word;
  bool at_least() const { return !radius; }
};

/// The witness is the first disagreeing element of minimal length, in ball
/// order, that is positive for o1.
AgreementResult agreement_radius(const Ordering& o1, const Ordering& o2, const Ball& ball);
AgreementResult agreement_radius(const Ordering& o1, const Ordering& o2, int max_radius,
                                 std::size_t cap = kDefaultBallCap);

/// 2^-n, or an upper bound 2^-max_radius when no disagreement was found.
struct Distance {
  Rational value;
  bool upper_bound = false;
  std::string str() const { return upper_bound ? "<=" + value.str() : value.str(); }
};

Distance dist(const AgreementResult& a);

/// Agreement radius of make_smirnov(g, p) with target for each p, in order.
std::vector<AgreementResult> converge_experiment(const Group& g, const std::vector<OrderParam>& params,
                                                 const Ordering& target, int max_radius,
                                                 std::size_t cap = kDefaultBallCap);

/// Radii compared with AtLeast(max) above every finite radius.
bool non_decreasing(const std::vector<AgreementResult>& rows);

struct ProbeOptions {
  int max_denominator_power = 6;  // translations searched in (1/m^d) Z, d <= this
  int max_exponent = 64;          // dilation power in the witness
};

struct ProbeResult {
  bool isolated = false;
  std::optional<Ordering> neighbor;
  std::optional<Element> witness;
  std::string witness_word;
};

/// Finds an implemented ordering != o keeping every element of positives
/// positive, with an element on which the two disagree. Isolated is only
/// returned for Tararin towers, where all 2^n orderings were tried. Throws
/// PreconditionError if some input is not o-positive, UnsupportedError for
/// shapes outside the implemented families and BoundExhaustedError when the
/// witness search runs out of room.
ProbeResult probe_neighborhood(const Ordering& o, const std::vector<Element>& positives,
                               const ProbeOptions& opts = {});

struct SweepReport {
  std::size_t probes = 0;
  std::size_t neighbors = 0;  // verified distinct neighbours
  std::size_t isolated = 0;
  std::size_t failures = 0;   // errors or failed verification
  std::string first_failure;
};

/// Probes o with every subset of size <= max_subset of the o-positive
/// elements of the ball, verifying each answer exactly.
SweepReport probe_sweep(const Ordering& o, const Ball& ball, int max_subset, const ProbeOptions& opts = {});

namespace serial {
SweepReport probe_sweep(const Ordering& o, const Ball& ball, int max_subset, const ProbeOptions& opts = {});
}

}  // namespace ordspace
