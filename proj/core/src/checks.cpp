#include "hypchroma/checks.hpp"

#include <algorithm>
#include <cmath>

#include "hypchroma/develop.hpp"
#include "hypchroma/errors.hpp"
#include "hypchroma/kernel.hpp"
#include "hypchroma/surfaces.hpp"

namespace hypchroma::checks {

namespace {

// Angle at vertex a of the triangle with sides opposite (a: x, b: y, c: z)
// lengths, from the hyperbolic law of cosines.
double law_of_cosines_angle(double opposite, double s1, double s2) {
  const double c = (std::cosh(s1) * std::cosh(s2) - std::cosh(opposite)) / (std::sinh(s1) * std::sinh(s2));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

// Line perpendicular to the ray at angle `angle` through its point at distance h.
GeodesicLine perpendicular_line(double h, double angle) {
  const Isometry place = Isometry::rotation(angle) * Isometry::translation_x(h);
  return line_through(place.apply(HPoint::from_polar(1.0, 0.5 * kPi)), place.apply(HPoint::from_polar(1.0, -0.5 * kPi)));
}

}  // namespace

double ideal_inradius_numeric(int n) {
  if (n < 3) fail(ErrorKind::InvalidInput, "N must be >= 3");
  const GeodesicLine side = line_through(ideal_point(0.0), ideal_point(2.0 * kPi / n));
  return distance_to_line(HPoint(), side);
}

double ideal_developed_distance(int n) {
  const GluedSurface s = build_ideal_surface(n);
  const GluingView view = gluing_view(s);
  const PathStep step{0, 0};
  const auto chain = develop(view, std::span<const PathStep>(&step, 1));
  return dist(chain.placements[0].center, chain.placements[1].center);
}

double truncation_numeric(int n, double d) {
  if (n < 3) fail(ErrorKind::InvalidInput, "N must be >= 3");
  return line_separation(perpendicular_line(0.5 * d, 0.0), perpendicular_line(0.5 * d, 2.0 * kPi / n));
}

double truncated_distance_numeric(int n, double t) {
  if (!(t > 0.0)) fail(ErrorKind::InvalidInput, "t must be > 0");
  double lo = 0.0, hi = 40.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (truncation_numeric(n, mid) < t ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double truncated_developed_distance(int n, double t) {
  const GluedSurface s = build_truncated_surface(n, t);
  const GluingView view = gluing_view(s);
  const PathStep step{0, 0};
  const auto chain = develop(view, std::span<const PathStep>(&step, 1));
  return dist(chain.placements[0].center, chain.placements[1].center);
}

double semi_regular_arc_numeric(int n, double t) {
  const PolygonFrame f = polygon_frame(PolygonSpec::semi_regular(n, t));
  return dist((*f.sides[0].endpoints)[1], (*f.sides[1].endpoints)[0]);
}

double equilateral_side_numeric(int n) {
  if (n <= 6) fail(ErrorKind::GeometryInfeasible, "N must be >= 7");
  const double apex = 2.0 * kPi / n;
  auto excess = [apex](double s) {
    return dist(HPoint::from_polar(s, 0.0), HPoint::from_polar(s, apex)) - s;
  };
  double lo = 1e-6, hi = 40.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double equilateral_altitude_numeric(int n) {
  const double s = equilateral_side_numeric(n);
  const HPoint a;
  const HPoint b = HPoint::from_polar(s, 0.0);
  const HPoint c = HPoint::from_polar(s, 2.0 * kPi / n);
  return distance_to_segment(a, b, c);
}

double holed_side_numeric(int n, double t) {
  const auto q = realize(solve_right_quadrilateral(t / 3.0, kPi / n));
  return dist(q.summit_left, q.summit_right);
}

double ball_area_quadrature(double rho, int intervals) {
  if (rho < 0.0) fail(ErrorKind::InvalidInput, "rho must be >= 0");
  if (intervals < 2) intervals = 2;
  if (intervals % 2) ++intervals;
  const double h = rho / intervals;
  double sum = 0.0;
  for (int i = 0; i <= intervals; ++i) {
    const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += w * std::sinh(i * h);
  }
  return 2.0 * kPi * sum * h / 3.0;
}

double quadrilateral_law_of_cosines_residual(double base, double summit_angle) {
  const auto q = solve_right_quadrilateral(base, summit_angle);
  const auto v = realize(q);
  const HPoint corners[4] = {v.base_left, v.base_right, v.summit_right, v.summit_left};
  const double expected[4] = {0.5 * kPi, 0.5 * kPi, summit_angle, summit_angle};
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    const HPoint& p = corners[k];
    const HPoint& prev = corners[(k + 3) % 4];
    const HPoint& next = corners[(k + 1) % 4];
    const double angle = law_of_cosines_angle(dist(prev, next), dist(p, prev), dist(p, next));
    worst = std::max(worst, std::abs(angle - expected[k]));
  }
  // Side lengths against the solver.
  worst = std::max(worst, std::abs(dist(v.base_left, v.base_right) - q.base));
  worst = std::max(worst, std::abs(dist(v.base_right, v.summit_right) - q.leg));
  worst = std::max(worst, std::abs(dist(v.summit_left, v.summit_right) - q.summit));
  worst = std::max(worst, std::abs(dist(v.base_left, v.summit_right) - q.diagonal));
  return worst;
}

}  // namespace hypchroma::checks
