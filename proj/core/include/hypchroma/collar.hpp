#pragma once

// Slicing of thin cylinders (collars around short geodesics) into sections
// of diameter below d, and the coloring of the resulting section graph.

#include <cstdint>
#include <string>
#include <vector>

namespace hypchroma::collar {

/// Length of the curve at distance rho from a geodesic of length l: l cosh(rho).
double parallel_curve_length(double geodesic_length, double rho);

/// Length of the boundary curve of the thin cylinder:
/// l cosh(K_C) = l sinh(eps) / sinh(l/2).
double boundary_curve_length(double geodesic_length, double thinness);

struct Section {
  double rho_top = 0;     // distance of the outer curve from the geodesic
  double rho_bottom = 0;
  double height = 0;
  double diam_bound = 0;  // height + (outer curve length) / 2
  int color = -1;
};

struct HalfCollar {
  double geodesic_length = 0;
  double thinness = 0;
  double d = 0;
  double r0 = 0;
  double d_prime = 0;           // d (1 - 1e-6)
  double boundary_distance = 0;  // K_C
  double boundary_length = 0;    // length of the outer boundary curve
  bool paper_regime = false;     // boundary_length <= r0 <= d/2
  std::vector<Section> sections;  // top (rho = K_C) down to rho = 0
};

/// Iterates from the top: each section has the height that brings its
/// diameter bound to d'. Throws parameter-regime naming the failed
/// inequality when eps > arcsinh(1/sqrt(2)), sinh(eps) < sinh(l/2), or the
/// boundary curve is too long for heights above d/2 (length >= 2d' - d).
HalfCollar slice_half_collar(double geodesic_length, double thinness, double d, double r0);

struct CylinderColoring {
  HalfCollar upper;
  HalfCollar lower;
  int max_degree = 0;   // in the section graph
  int colors_used = 0;
  std::vector<std::vector<int>> adjacency;  // over upper sections then lower sections
};

/// Colors the sections of both halves. Sections of one half are adjacent when
/// their rho-intervals could contain a pair at distance d:
/// gap <= d <= span + (longest curve length) / 2. The halves use disjoint
/// palettes.
CylinderColoring color_cylinder(const HalfCollar& upper, const HalfCollar& lower, double d);

/// Colors for all thin cylinders of a genus-g surface: 10 (3g - 3).
std::int64_t cylinder_budget(std::int64_t g);

}  // namespace hypchroma::collar
