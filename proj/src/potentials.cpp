#include "stringnet/potentials.hpp"

#include <algorithm>

namespace stringnet {

namespace {

constexpr double kDistanceFloor = 1e-9;

thread_local std::uint64_t tl_near_violations = 0;

void require_valid(const PotentialSpec& spec) {
  if (!potential_spec_valid(spec)) {
    throw DomainError("potential: spec requires 0 <= min_dist < desired_offset");
  }
}

}  // namespace

PotentialSpec make_potential_spec(double min_dist, double desired_offset,
                                  double velocity_gain, double gradient_gain) {
  PotentialSpec spec{min_dist, desired_offset, velocity_gain, gradient_gain};
  require_valid(spec);
  if (velocity_gain < 0.0 || gradient_gain < 0.0) {
    throw DomainError("potential: gains must be nonnegative");
  }
  return spec;
}

bool potential_spec_valid(const PotentialSpec& spec) {
  return spec.min_dist >= 0.0 && spec.desired_offset > 0.0 &&
         spec.desired_offset > spec.min_dist;
}

double potential(const PotentialSpec& spec, double dist) {
  require_valid(spec);
  const double u = dist - spec.min_dist;
  if (!(u > 0.0)) {
    throw DomainError("potential: distance at or below the safety floor");
  }
  return std::log(spec.desired_offset / u + u / spec.desired_offset);
}

double potential_slope(const PotentialSpec& spec, double dist) {
  require_valid(spec);
  const double u = dist - spec.min_dist;
  if (!(u > 0.0)) {
    throw DomainError("potential_slope: distance at or below the safety floor");
  }
  const double t = spec.desired_offset;
  return (u * u - t * t) / (u * (u * u + t * t));
}

Vec2 pairwise_accel(const PotentialSpec& spec, const RelativeState& rel) {
  require_valid(spec);
  const Vec2 d = rel.r_i - rel.r_j;
  const double dist = norm(d);
  if (dist == 0.0) {
    throw DomainError("pairwise_accel: coincident positions");
  }
  double eval_dist = dist;
  const double floor_dist = spec.min_dist + kDistanceFloor;
  if (eval_dist < floor_dist) {
    eval_dist = floor_dist;
    ++tl_near_violations;
  }
  const double slope = potential_slope(spec, eval_dist);
  return -spec.velocity_gain * (rel.v_i - rel.v_j) -
         spec.gradient_gain * slope * (d / dist);
}

std::uint64_t near_violation_count() { return tl_near_violations; }

void reset_near_violation_count() { tl_near_violations = 0; }

}  // namespace stringnet
