#pragma once

// Closed-form hyperbolic trigonometry behind the coloring bounds and the
// lower-bound surfaces. Every function validates its domain and throws
// invalid-input or geometry-infeasible instead of returning NaN.

namespace hypchroma::formulas {

/// arcsinh(1): the thin-part threshold below which short geodesics are disjoint.
double asinh_one();
/// arcsinh(1/sqrt(2)): the thinness up to which half-collars are convex.
double convexity_threshold();

struct CollarGeometry {
  double geodesic_length = 0;     // length of the core geodesic
  double thinness = 0;            // injectivity-radius threshold epsilon
  double width = 0;               // collar width w = arcsinh(1 / sinh(l/2))
  double boundary_distance = 0;   // K_C = arccosh(sinh(eps) / sinh(l/2))
  double margin = 0;              // width - boundary_distance
};

CollarGeometry collar_geometry(double geodesic_length, double thinness);

/// Distance between adjacent centers of regular ideal N-gons glued at side
/// midpoints: arccosh(2 / sin^2(pi/N) - 1), twice the inradius.
double ideal_clique_distance(int n);

/// Center distance for the semi-regular right-angled 2N-gon whose alternate
/// sides have length t: cosh(t/2) = cosh(d/2) sin(pi/N).
double truncated_clique_distance(int n, double t);

/// Inverse of truncated_clique_distance in t. Throws geometry-infeasible when
/// d is below the ideal distance for n.
double solve_t(int n, double d);

/// Length of the paste sides of the semi-regular 2N-gon with boundary sides t.
double semi_regular_paste_side(int n, double t);

/// Side of the equilateral triangle with all angles 2 pi / N (N >= 7).
double equilateral_side(int n);

/// Inradius and circumradius of that triangle.
double equilateral_inradius(int n);
double equilateral_circumradius(int n);

struct HoledTriangleMetrics {
  double side = 0;            // l'_N = 2 arccosh(cosh(t/6) / sin(pi/N))
  double vertex_to_hole = 0;  // a with sinh(l'/2) = sinh(t/6) cosh(a)
  double margin() const { return vertex_to_hole - 0.5 * side; }
};

HoledTriangleMetrics holed_triangle_metrics(int n, double t);

/// Boundary length t with sinh(t/6) = 1/4, the hole size used for the
/// genus constructions.
double default_hole_length();

/// Packing bound on the degree of the net distance graph:
/// sinh(5 r0 / 2) sinh(d) / sinh^2(r0 / 4).
double degree_bound(double d, double r0);

/// The annulus-area form of the same bound,
/// (sinh^2((d + 5r0/2)/2) - sinh^2((d - 5r0/2)/2)) / sinh^2(r0/4).
double degree_bound_annulus(double d, double r0);

/// Net radius r0 = min(2d/5, arcsinh(1)).
double net_radius(double d);

/// Piecewise degree bound exactly as printed: sinh^2(d)/sinh^2(d/10) up to
/// d = 10 arcsinh(1), sinh(10 arcsinh(1)) sinh(d) above.
double phi(double d);

/// Self-consistent variant: degree_bound(d, net_radius(d)).
double phi_consistent(double d);

/// Break point 10 arcsinh(1) of phi.
double phi_breakpoint();

}  // namespace hypchroma::formulas
