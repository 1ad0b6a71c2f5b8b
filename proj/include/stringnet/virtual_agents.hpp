#pragma once

#include "stringnet/geometry.hpp"

namespace stringnet {

/// A virtual agent riding a boundary: contour projection of a real agent, the
/// closest point on a string segment, or a point on a moving circle.
struct VirtualAgent {
  Vec2 pos;
  Vec2 vel;
};

struct StringSegment {
  AgentState a;
  AgentState b;
};

/// Project (r, v) onto the obstacle's margin-level contour. The position is
/// the closest contour point (the displacement back to r is normal to the
/// contour); the velocity is the tangential component of v, tangent oriented
/// along the direction of motion. Throws InsideContour when r is strictly
/// inside the contour and ProjectionFailed when the root finder does not
/// converge within its iteration budget.
VirtualAgent project_onto_contour(const Obstacle& ob, const Vec2& r, const Vec2& v);

/// Euclidean closest point on the closed segment; velocity interpolates the
/// endpoint velocities at the clamped barycentric coordinate.
VirtualAgent project_onto_string(const StringSegment& seg, const Vec2& r);

/// Radial projection onto a circle moving with carrier_vel. The returned
/// velocity is the carrier velocity plus the tangential part of the relative
/// motion of (r, v) with respect to the circle.
VirtualAgent project_onto_circle(const Vec2& center, double radius,
                                 const Vec2& carrier_vel, const Vec2& r, const Vec2& v);

}  // namespace stringnet
