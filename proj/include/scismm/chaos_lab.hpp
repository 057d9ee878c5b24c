#pragma once

#include "scismm/phase_space.hpp"

namespace scismm {

// No iteration step can output a point whose message is a single bit equal to
// every bit of its cover: each step writes the pre-negation message bit, so
// the written cell always disagrees with the post-step message. Such pairs
// can be neither periodic nor hit exactly, and the constructors reject them.
bool is_unreachable_pair(const BitVector& cover, const BitVector& message);

struct PeriodicPointResult {
  PointX2 point;
  std::size_t period;
};

// Builds a point within eps of the target (same cover and message, strategy
// prefixes of length k0(eps) copied) that returns to itself after exactly
// `period` steps. The periodicity and the distance bound are re-verified by
// direct iteration before returning; a verification failure is an
// implementation bug and raises ConstructionFailed.
PeriodicPointResult construct_periodic_point(const PointX2& target, double eps,
                                             TruncationDepth d = {});

struct TransitPointResult {
  PointX2 point;
  std::size_t steps_to_target;
};

// Builds a point inside the open ball around `ball_center` whose
// steps_to_target-th iterate equals `target_center` in both states and in all
// three strategies up to the truncation depth. Verified by iteration.
TransitPointResult construct_transit_point(const PointX2& ball_center,
                                           double radius,
                                           const PointX2& target_center,
                                           TruncationDepth d = {});

struct SensitivityResult {
  PointX2 neighbour;
  std::size_t diverged_at;  // first n with d2 of the two orbits >= 1
};

// Finds a neighbour within 10^-k of x (equal states, strategies modified at a
// single index >= k+2) whose orbit separates from x's by at least one state
// bit within max_steps steps. ProbeExhausted when no admissible modification
// leads to separation in time (degenerate single-cell, single-bit systems
// never separate).
SensitivityResult sensitivity_probe(const PointX2& x, int closeness_exponent,
                                    std::size_t max_steps,
                                    TruncationDepth d = {});

}  // namespace scismm
