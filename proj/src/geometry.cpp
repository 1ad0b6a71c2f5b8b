#include "stringnet/geometry.hpp"

#include <algorithm>
#include <string>

namespace stringnet {

Vec2 sig_alpha(const Vec2& x, double alpha) {
  if (!(alpha > 0.0)) {
    throw DomainError("sig_alpha: alpha must be positive");
  }
  const double n = norm(x);
  if (n == 0.0) {
    return {0.0, 0.0};
  }
  return x * std::pow(n, alpha - 1.0);
}

double sig_pow(double x, double m) { return x * std::pow(std::abs(x), m); }

Vec2 saturate(const Vec2& u, double u_max) {
  if (!(u_max > 0.0)) {
    throw DomainError("saturate: bound must be positive");
  }
  const double n = norm(u);
  if (n <= u_max) {
    return u;
  }
  return u * (u_max / n);
}

Vec2 unit_from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }

double normalize_angle(double theta) {
  double t = std::remainder(theta, 2.0 * M_PI);
  if (t <= -M_PI) {
    t += 2.0 * M_PI;
  }
  return t;
}

double blend(const BlendSpec& spec, double delta) {
  if (!(spec.lower < spec.upper)) {
    throw DomainError("blend: need lower < upper");
  }
  if (delta <= spec.lower) {
    return 1.0;
  }
  if (delta >= spec.upper) {
    return 0.0;
  }
  const double lo = spec.lower;
  const double hi = spec.upper;
  const double w3 = (hi - lo) * (hi - lo) * (hi - lo);
  const double a = 2.0 / w3;
  const double b = -3.0 * (hi + lo) / w3;
  const double c = 6.0 * hi * lo / w3;
  const double d = hi * hi * (hi - 3.0 * lo) / w3;
  return ((a * delta + b) * delta + c) * delta + d;
}

Obstacle make_obstacle(Vec2 center, double width, double height, double envelope_margin,
                       int exponent, double margin_level) {
  if (!(width > 0.0) || !(height > 0.0)) {
    throw DomainError("obstacle: width and height must be positive");
  }
  if (exponent < 1) {
    throw DomainError("obstacle: exponent must be a positive integer");
  }
  if (!(margin_level > 0.0)) {
    throw DomainError("obstacle: margin level must be positive");
  }
  if (envelope_margin < 0.0) {
    throw DomainError("obstacle: envelope margin must be nonnegative");
  }
  Obstacle ob;
  ob.center = center;
  ob.width = width;
  ob.height = height;
  ob.semi_a = 0.5 * width * (1.0 + envelope_margin);
  ob.semi_b = 0.5 * height * (1.0 + envelope_margin);
  ob.exponent = exponent;
  ob.margin_level = margin_level;
  if (!rectangle_inside_margin_contour(ob)) {
    throw DomainError(
        "obstacle: rectangle corner reaches the margin-level contour; increase the "
        "margin level or the envelope margin");
  }
  return ob;
}

double superelliptic_distance(const Obstacle& ob, const Vec2& r) {
  const double p = 2.0 * ob.exponent;
  const double ux = std::abs((r.x - ob.center.x) / ob.semi_a);
  const double uy = std::abs((r.y - ob.center.y) / ob.semi_b);
  return std::pow(ux, p) + std::pow(uy, p) - 1.0;
}

Vec2 superelliptic_gradient(const Obstacle& ob, const Vec2& r) {
  const double p = 2.0 * ob.exponent;
  const double ux = (r.x - ob.center.x) / ob.semi_a;
  const double uy = (r.y - ob.center.y) / ob.semi_b;
  return {p / ob.semi_a * sig_pow(ux, p - 2.0), p / ob.semi_b * sig_pow(uy, p - 2.0)};
}

Vec2 contour_point(const Obstacle& ob, double level, double phi) {
  if (!(level > -1.0)) {
    throw DomainError("contour_point: level must exceed -1");
  }
  const double p = 2.0 * ob.exponent;
  const double scale = std::pow(1.0 + level, 1.0 / p);
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double cx = std::copysign(std::pow(std::abs(c), 2.0 / p), c);
  const double sy = std::copysign(std::pow(std::abs(s), 2.0 / p), s);
  return {ob.center.x + ob.semi_a * scale * cx, ob.center.y + ob.semi_b * scale * sy};
}

bool rectangle_inside_margin_contour(const Obstacle& ob) {
  // By symmetry one corner decides.
  const Vec2 corner{ob.center.x + 0.5 * ob.width, ob.center.y + 0.5 * ob.height};
  return superelliptic_distance(ob, corner) < ob.margin_level;
}

}  // namespace stringnet
