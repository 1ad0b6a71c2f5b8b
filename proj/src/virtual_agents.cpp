#include "stringnet/virtual_agents.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>

namespace stringnet {

namespace {

constexpr double kOnContourTol = 1e-12;
constexpr double kAxisTol = 1e-12;
constexpr double kOrthoTol = 1e-12;
constexpr int kScanSamples = 64;
constexpr int kMaxIterations = 100;

// Level curve |x/A|^p + |y/B|^p = 1 in the obstacle frame, parameterized by
// phi with x = A*sgn(cos)|cos|^(2/p), y = B*sgn(sin)|sin|^(2/p).
struct LevelCurve {
  double A;
  double B;
  double p;

  Vec2 point(double phi) const {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return {A * std::copysign(std::pow(std::abs(c), 2.0 / p), c),
            B * std::copysign(std::pow(std::abs(s), 2.0 / p), s)};
  }

  // d/dphi of the parameterization. Unbounded near the axes for p > 2; the
  // solver treats non-finite values as a failed Newton step.
  Vec2 deriv(double phi) const {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const double e = 2.0 / p;
    const double dx = -A * e * std::pow(std::abs(c), e - 1.0) * s;
    const double dy = B * e * std::pow(std::abs(s), e - 1.0) * c;
    return {dx, dy};
  }

  Vec2 second_deriv(double phi) const {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const double e = 2.0 / p;
    const double ac = std::abs(c);
    const double as = std::abs(s);
    // d/dphi [-A e |c|^(e-1) s] and [B e |s|^(e-1) c]
    const double dxx = -A * e *
                       ((e - 1.0) * std::pow(ac, e - 2.0) * (-std::copysign(1.0, c)) * s * s +
                        std::pow(ac, e - 1.0) * c);
    const double dyy = B * e *
                       ((e - 1.0) * std::pow(as, e - 2.0) * std::copysign(1.0, s) * c * c -
                        std::pow(as, e - 1.0) * s);
    return {dxx, dyy};
  }
};

// Half of d/dphi of the squared distance to q; roots are the critical points
// of the distance along the curve.
double distance_slope(const LevelCurve& curve, const Vec2& q, double phi) {
  return dot(curve.point(phi) - q, curve.deriv(phi));
}

double distance_slope_deriv(const LevelCurve& curve, const Vec2& q, double phi) {
  const Vec2 d = curve.point(phi) - q;
  const Vec2 dp = curve.deriv(phi);
  return norm_sq(dp) + dot(d, curve.second_deriv(phi));
}

// Normalized orthogonality defect: sine of the angle between (q - p) and the
// contour normal at p. Zero at a true projection.
double orthogonality_residual(const LevelCurve& curve, const Vec2& q, double phi) {
  const Vec2 p = curve.point(phi);
  const Vec2 d = q - p;
  const double dn = norm(d);
  if (dn < kOnContourTol) {
    return 0.0;
  }
  // Gradient of |x/A|^p + |y/B|^p at p, up to a positive factor.
  const Vec2 g{sig_pow(p.x / curve.A, curve.p - 2.0) / curve.A,
               sig_pow(p.y / curve.B, curve.p - 2.0) / curve.B};
  const double gn = norm(g);
  if (gn == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return std::abs(cross(d, g)) / (dn * gn);
}

struct Candidate {
  double phi;
  double dist_sq;
};

// Safeguarded Newton on distance_slope inside a sign-change bracket, with
// bisection whenever the Newton step leaves the bracket or goes non-finite.
std::optional<Candidate> refine_bracket(const LevelCurve& curve, const Vec2& q, double lo,
                                        double hi, double f_lo) {
  double phi = 0.5 * (lo + hi);
  for (int it = 0; it < kMaxIterations; ++it) {
    if (orthogonality_residual(curve, q, phi) < kOrthoTol) {
      return Candidate{phi, norm_sq(curve.point(phi) - q)};
    }
    const double f = distance_slope(curve, q, phi);
    if (f == 0.0) {
      return Candidate{phi, norm_sq(curve.point(phi) - q)};
    }
    if ((f > 0.0) == (f_lo > 0.0)) {
      lo = phi;
    } else {
      hi = phi;
    }
    const double fp = distance_slope_deriv(curve, q, phi);
    double next = phi - f / fp;
    if (!std::isfinite(next) || next <= lo || next >= hi) {
      next = 0.5 * (lo + hi);
    }
    phi = next;
  }
  return std::nullopt;
}

Vec2 solve_projection(const LevelCurve& curve, const Vec2& q) {
  // Coarse scan offset by half a step so the samples never hit the axes,
  // where the parameterization derivative is singular.
  std::array<double, kScanSamples> phis;
  std::array<double, kScanSamples> slopes;
  for (int m = 0; m < kScanSamples; ++m) {
    phis[m] = 2.0 * M_PI * (m + 0.5) / kScanSamples;
    slopes[m] = distance_slope(curve, q, phis[m]);
  }

  bool found = false;
  double best_dist_sq = std::numeric_limits<double>::infinity();
  double best_phi = 0.0;
  for (int m = 0; m < kScanSamples; ++m) {
    const int m2 = (m + 1) % kScanSamples;
    const double lo = phis[m];
    const double hi = (m2 == 0) ? phis[m2] + 2.0 * M_PI : phis[m2];
    if (slopes[m] == 0.0) {
      const double d = norm_sq(curve.point(lo) - q);
      if (d < best_dist_sq) {
        best_dist_sq = d;
        best_phi = lo;
        found = true;
      }
      continue;
    }
    if ((slopes[m] > 0.0) == (slopes[m2] > 0.0)) {
      continue;
    }
    if (auto cand = refine_bracket(curve, q, lo, hi, slopes[m])) {
      if (cand->dist_sq < best_dist_sq) {
        best_dist_sq = cand->dist_sq;
        best_phi = cand->phi;
        found = true;
      }
    }
  }
  if (!found) {
    throw ProjectionFailed("contour projection did not converge");
  }
  return curve.point(best_phi);
}

}  // namespace

VirtualAgent project_onto_contour(const Obstacle& ob, const Vec2& r, const Vec2& v) {
  const double level = ob.margin_level;
  const double e_query = superelliptic_distance(ob, r);
  if (e_query < level - kOnContourTol) {
    throw InsideContour("query point is inside the margin-level contour");
  }

  Vec2 pos;
  if (e_query <= level + kOnContourTol) {
    pos = r;  // already riding the contour
  } else {
    const Vec2 q{r.x - ob.center.x, r.y - ob.center.y};
    const double p = 2.0 * ob.exponent;
    const double scale = std::pow(1.0 + level, 1.0 / p);
    const LevelCurve curve{ob.semi_a * scale, ob.semi_b * scale, p};
    Vec2 local;
    if (std::abs(q.y) < kAxisTol) {
      // On an axis the closest point is the axis intersection on the query's
      // side; the general solver divides by near-zero there.
      local = {std::copysign(curve.A, q.x), 0.0};
    } else if (std::abs(q.x) < kAxisTol) {
      local = {0.0, std::copysign(curve.B, q.y)};
    } else {
      local = solve_projection(curve, q);
    }
    pos = {ob.center.x + local.x, ob.center.y + local.y};
  }

  Vec2 g = superelliptic_gradient(ob, pos);
  Vec2 t{-g.y, g.x};
  const double tn = norm(t);
  if (tn == 0.0) {
    throw ProjectionFailed("degenerate contour gradient at projection");
  }
  t = t / tn;
  if (dot(v, t) < 0.0) {
    t = -t;
  }
  return {pos, dot(v, t) * t};
}

VirtualAgent project_onto_string(const StringSegment& seg, const Vec2& r) {
  const Vec2 d = seg.b.pos - seg.a.pos;
  const double len_sq = norm_sq(d);
  if (len_sq == 0.0) {
    throw DomainError("string segment endpoints coincide");
  }
  double t = dot(r - seg.a.pos, d) / len_sq;
  t = std::clamp(t, 0.0, 1.0);
  return {seg.a.pos + t * d, seg.a.vel + t * (seg.b.vel - seg.a.vel)};
}

VirtualAgent project_onto_circle(const Vec2& center, double radius,
                                 const Vec2& carrier_vel, const Vec2& r, const Vec2& v) {
  if (!(radius > 0.0)) {
    throw DomainError("circle projection: radius must be positive");
  }
  Vec2 dir = r - center;
  const double dn = norm(dir);
  dir = (dn == 0.0) ? Vec2{1.0, 0.0} : dir / dn;
  Vec2 t{-dir.y, dir.x};
  const Vec2 rel = v - carrier_vel;
  if (dot(rel, t) < 0.0) {
    t = -t;
  }
  return {center + radius * dir, carrier_vel + dot(rel, t) * t};
}

}  // namespace stringnet
