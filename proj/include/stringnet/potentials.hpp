#pragma once

#include <cstdint>

#include "stringnet/geometry.hpp"

namespace stringnet {

/// Shape of one pairwise interaction: the potential blows up at min_dist and
/// has its unique minimum at min_dist + desired_offset.
struct PotentialSpec {
  double min_dist = 0.0;        // hard safety distance
  double desired_offset = 1.0;  // preferred spacing beyond min_dist
  double velocity_gain = 1.0;   // damping on the relative velocity
  double gradient_gain = 1.0;   // weight of the gradient term
};

/// Validating constructor-equivalent; throws DomainError on a bad spec.
PotentialSpec make_potential_spec(double min_dist, double desired_offset,
                                  double velocity_gain, double gradient_gain);

bool potential_spec_valid(const PotentialSpec& spec);

struct RelativeState {
  Vec2 r_i;
  Vec2 v_i;
  Vec2 r_j;
  Vec2 v_j;
};

/// ln(desired_offset/u + u/desired_offset) with u = dist - min_dist.
double potential(const PotentialSpec& spec, double dist);

/// d(potential)/d(dist); zero exactly at min_dist + desired_offset.
double potential_slope(const PotentialSpec& spec, double dist);

/// Damped-gradient control primitive for one interacting pair. Distances that
/// land inside the singular band are floored at min_dist + 1e-9 (the slope
/// stays finite) and the event is counted as a near violation.
Vec2 pairwise_accel(const PotentialSpec& spec, const RelativeState& rel);

/// Near-violation count for the current thread since the last reset.
std::uint64_t near_violation_count();
void reset_near_violation_count();

}  // namespace stringnet
