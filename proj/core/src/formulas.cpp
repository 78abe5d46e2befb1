#include "hypchroma/formulas.hpp"

#include <cmath>
#include <string>

#include "hypchroma/errors.hpp"
#include "hypchroma/kernel.hpp"

namespace hypchroma::formulas {

namespace {

void require_finite_positive(double x, const char* name) {
  if (!std::isfinite(x) || !(x > 0.0)) fail(ErrorKind::InvalidInput, std::string(name) + " must be finite and > 0");
}

void require_polygon_order(int n, int minimum) {
  if (n < minimum) fail(ErrorKind::InvalidInput, "N must be >= " + std::to_string(minimum));
}

double sq(double x) { return x * x; }

}  // namespace

double asinh_one() { return std::asinh(1.0); }

double convexity_threshold() { return std::asinh(1.0 / std::sqrt(2.0)); }

CollarGeometry collar_geometry(double geodesic_length, double thinness) {
  require_finite_positive(geodesic_length, "geodesic length");
  require_finite_positive(thinness, "thinness");
  if (thinness > asinh_one())
    fail(ErrorKind::GeometryInfeasible, "thinness must be <= arcsinh(1) for the thin part to be a union of cylinders");
  const double sh = std::sinh(0.5 * geodesic_length);
  CollarGeometry c;
  c.geodesic_length = geodesic_length;
  c.thinness = thinness;
  c.width = std::asinh(1.0 / sh);
  c.boundary_distance = acosh_stable(std::sinh(thinness) / sh, "sinh(eps)/sinh(l/2)");
  c.margin = c.width - c.boundary_distance;
  return c;
}

double ideal_clique_distance(int n) {
  require_polygon_order(n, 3);
  const double s = std::sin(kPi / n);
  // cosh(d) = 2/s^2 - 1, i.e. cosh(d/2) = 1/s.
  return 2.0 * acosh_stable(1.0 / s);
}

double truncated_clique_distance(int n, double t) {
  require_polygon_order(n, 3);
  if (!std::isfinite(t) || t < 0.0) fail(ErrorKind::InvalidInput, "t must be finite and >= 0");
  return 2.0 * acosh_stable(std::cosh(0.5 * t) / std::sin(kPi / n));
}

double solve_t(int n, double d) {
  require_polygon_order(n, 3);
  if (!std::isfinite(d) || !(d > 0.0)) fail(ErrorKind::InvalidInput, "d must be finite and > 0");
  const double arg = std::cosh(0.5 * d) * std::sin(kPi / n);
  if (arg < 1.0 - 1e-14) {
    fail(ErrorKind::GeometryInfeasible,
         "d = " + std::to_string(d) + " is below the ideal clique distance for N = " + std::to_string(n));
  }
  return 2.0 * acosh_stable(std::max(arg, 1.0));
}

double semi_regular_paste_side(int n, double t) {
  require_polygon_order(n, 3);
  require_finite_positive(t, "t");
  // Trirectangle: cos(pi/N) = sinh(s/2) sinh(t/2).
  return 2.0 * std::asinh(std::cos(kPi / n) / std::sinh(0.5 * t));
}

double equilateral_side(int n) {
  if (n <= 6)
    fail(ErrorKind::GeometryInfeasible, "equilateral triangles with angles 2pi/N are hyperbolic only for N >= 7");
  const double a = 2.0 * kPi / n;
  const double c = std::cos(a);
  return acosh_stable((c * c + c) / sq(std::sin(a)), "equilateral side");
}

double equilateral_inradius(int n) {
  if (n <= 6) fail(ErrorKind::GeometryInfeasible, "equilateral triangle requires N >= 7");
  // Right triangle center / side midpoint / vertex: cos(pi/N) = cosh(r) sin(pi/3).
  return acosh_stable(std::cos(kPi / n) / std::sin(kPi / 3.0), "inradius");
}

double equilateral_circumradius(int n) {
  if (n <= 6) fail(ErrorKind::GeometryInfeasible, "equilateral triangle requires N >= 7");
  return acosh_stable(1.0 / (std::tan(kPi / 3.0) * std::tan(kPi / n)), "circumradius");
}

HoledTriangleMetrics holed_triangle_metrics(int n, double t) {
  if (n < 7) fail(ErrorKind::GeometryInfeasible, "holed triangles with angles 2pi/N require N >= 7");
  require_finite_positive(t, "t");
  HoledTriangleMetrics m;
  m.side = 2.0 * acosh_stable(std::cosh(t / 6.0) / std::sin(kPi / n), "cosh(t/6)/sin(pi/N)");
  m.vertex_to_hole = acosh_stable(std::sinh(0.5 * m.side) / std::sinh(t / 6.0), "sinh(l'/2)/sinh(t/6)");
  return m;
}

double default_hole_length() { return 6.0 * std::asinh(0.25); }

double degree_bound(double d, double r0) {
  require_finite_positive(d, "d");
  require_finite_positive(r0, "r0");
  if (r0 > 0.4 * d * (1.0 + 1e-12)) fail(ErrorKind::InvalidInput, "r0 must satisfy r0 <= 2d/5");
  return std::sinh(2.5 * r0) * std::sinh(d) / sq(std::sinh(0.25 * r0));
}

double degree_bound_annulus(double d, double r0) {
  require_finite_positive(d, "d");
  require_finite_positive(r0, "r0");
  if (r0 > 0.4 * d * (1.0 + 1e-12)) fail(ErrorKind::InvalidInput, "r0 must satisfy r0 <= 2d/5");
  const double outer = std::sinh(0.5 * (d + 2.5 * r0));
  const double inner = std::sinh(0.5 * (d - 2.5 * r0));
  return (sq(outer) - sq(inner)) / sq(std::sinh(0.25 * r0));
}

double net_radius(double d) {
  require_finite_positive(d, "d");
  return std::min(0.4 * d, asinh_one());
}

double phi_breakpoint() { return 10.0 * asinh_one(); }

double phi(double d) {
  require_finite_positive(d, "d");
  if (d <= phi_breakpoint()) return sq(std::sinh(d)) / sq(std::sinh(0.1 * d));
  return std::sinh(phi_breakpoint()) * std::sinh(d);
}

double phi_consistent(double d) { return degree_bound(d, net_radius(d)); }

}  // namespace hypchroma::formulas
