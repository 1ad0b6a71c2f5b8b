#pragma once

#include <cmath>

#include "stringnet/errors.hpp"

namespace stringnet {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  Vec2& operator*=(double s) {
    x *= s;
    y *= s;
    return *this;
  }
};

inline Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
inline Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
inline Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double s, Vec2 v) { return v *= s; }
inline Vec2 operator*(Vec2 v, double s) { return v *= s; }
inline Vec2 operator/(Vec2 v, double s) { return {v.x / s, v.y / s}; }
inline bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm_sq(const Vec2& v) { return dot(v, v); }
inline double norm(const Vec2& v) { return std::sqrt(norm_sq(v)); }
inline double distance(const Vec2& a, const Vec2& b) { return norm(a - b); }
inline bool is_finite(const Vec2& v) { return std::isfinite(v.x) && std::isfinite(v.y); }

struct AgentState {
  Vec2 pos;
  Vec2 vel;
};

struct Disk {
  Vec2 center;
  double radius = 0.0;
};

/// x * ||x||^(alpha - 1), extended with the limit value 0 at x = 0.
Vec2 sig_alpha(const Vec2& x, double alpha);

/// Scalar signed power x * |x|^m.
double sig_pow(double x, double m);

/// Rescale u so its norm never exceeds u_max; direction preserved.
Vec2 saturate(const Vec2& u, double u_max);

Vec2 unit_from_angle(double theta);

/// Wrap into (-pi, pi]. Only used when reporting; internals keep raw radians.
double normalize_angle(double theta);

/// C1 cubic switch: 1 at or below `lower`, 0 at or above `upper`.
struct BlendSpec {
  double lower = 0.0;
  double upper = 1.0;
};

double blend(const BlendSpec& spec, double delta);

/// Axis-aligned rectangle plus the superelliptic envelope used for avoidance.
/// Virtual agents ride the contour at `margin_level`; the rectangle must lie
/// strictly inside that contour.
struct Obstacle {
  Vec2 center;
  double width = 0.0;
  double height = 0.0;
  double semi_a = 0.0;  // envelope semi-axis along x, >= width / 2
  double semi_b = 0.0;  // envelope semi-axis along y, >= height / 2
  int exponent = 4;     // superellipse half-exponent n; the curve power is 2n
  double margin_level = 0.5;
};

/// Envelope semi-axes are the half-dimensions scaled by (1 + envelope_margin).
/// Throws DomainError when dimensions are invalid or a rectangle corner pokes
/// outside the margin-level contour.
Obstacle make_obstacle(Vec2 center, double width, double height,
                       double envelope_margin = 0.05, int exponent = 4,
                       double margin_level = 0.5);

/// |dx/a|^(2n) + |dy/b|^(2n) - 1.
double superelliptic_distance(const Obstacle& ob, const Vec2& r);

Vec2 superelliptic_gradient(const Obstacle& ob, const Vec2& r);

/// Point on the contour {E = level} at angle parameter phi.
Vec2 contour_point(const Obstacle& ob, double level, double phi);

bool rectangle_inside_margin_contour(const Obstacle& ob);

}  // namespace stringnet
