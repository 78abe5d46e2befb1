#pragma once

// Independent numeric constructions used to cross-check the closed forms:
// each quantity is measured on points built with the kernel rather than
// evaluated from its formula.

namespace hypchroma::checks {

/// Distance from the center of the regular ideal N-gon to a side, from the
/// geodesic through two ideal vertices.
double ideal_inradius_numeric(int n);

/// Center-to-center distance of two ideal N-gons developed across a side of
/// the canonical surface.
double ideal_developed_distance(int n);

/// Truncation length for center distance d: the common perpendicular of two
/// adjacent paste-side lines of the 2N-gon whose paste sides lie at d/2.
double truncation_numeric(int n, double d);

/// Center distance whose truncation length is t, by bisection on
/// truncation_numeric. This direction stays well conditioned as t -> 0.
double truncated_distance_numeric(int n, double t);

/// Center-to-center distance across a paste side of the canonical truncated
/// surface, by development.
double truncated_developed_distance(int n, double t);

/// Boundary arc length of the realized semi-regular 2N-gon (corner to corner).
double semi_regular_arc_numeric(int n, double t);

/// Side of the equilateral triangle with angles 2 pi / N, by bisection on
/// an isosceles triangle with apex angle 2 pi / N.
double equilateral_side_numeric(int n);

/// Altitude of that triangle measured on realized points.
double equilateral_altitude_numeric(int n);

/// Summit of the quadrilateral with base t/3 and summit angles pi/N.
double holed_side_numeric(int n, double t);

/// Composite Simpson quadrature of 2 pi sinh(r) over [0, rho].
double ball_area_quadrature(double rho, int intervals = 2000);

/// Largest residual of the hyperbolic law of cosines over the four corners
/// of the realized quadrilateral (angles recomputed from side lengths).
double quadrilateral_law_of_cosines_residual(double base, double summit_angle);

}  // namespace hypchroma::checks
