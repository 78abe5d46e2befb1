#pragma once

// Bound calculators for chromatic numbers of hyperbolic surfaces, as functions
// of the forbidden distance d and of the genus g, together with the
// Ringel-Youngs bookkeeping behind the genus lower bound.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hypchroma::bounds {

/// Colors sufficient for a d-coloring of any hyperbolic surface:
/// floor(phi(d)) + 1 with phi as printed.
std::int64_t upper_bound_in_d(double d);

/// Same count from the self-consistent degree bound.
std::int64_t upper_bound_in_d_consistent(double d);

struct LowerInD {
  std::int64_t n = 3;             // polygons have N sides: d_N <= d < d_{N+1}
  std::optional<double> t_d;      // truncation length with d_N(t_d) = d
  bool degenerate = false;        // d < d_3: no construction applies
  /// Clique realized by the construction (N + 1 polygon centers), or 2 when
  /// degenerate (two points at distance d always exist).
  std::int64_t clique() const { return degenerate ? 2 : n + 1; }
};

LowerInD lower_bound_in_d(double d);

/// floor((n-3)(n-4)/12), the genus of a minimal embedding of K_n.
std::int64_t ringel_youngs_genus(std::int64_t n);

/// True when N + 1 = 0 mod 12.
bool triangulation_admissible(std::int64_t n);

/// Triangles in the minimal embedding of K_{N+1}:
/// T_N = 1 - 2 g_{N+1} + N(N-1)/2. Requires N + 1 = 0 mod 12.
std::int64_t triangle_count(std::int64_t n);

/// Genus after pasting the T_N holes of the block surface in pairs:
/// g_{N+1} + T_N / 2.
std::int64_t min_closed_genus(std::int64_t n);

/// The closed form N^2/4 - N/2 + 1/2 as printed, kept for the discrepancy
/// report; it is not an integer in general.
double printed_min_genus_formula(std::int64_t n);

struct GenusUpper {
  std::int64_t colors = 0;
  bool large_d = false;  // the thick/thin count with r0 = 4 arcsinh(1) was used
  /// Same count with the largest r0 compatible with the cylinder and
  /// convexity thresholds, r0 = 2 arcsinh(1/sqrt(2)).
  std::int64_t colors_consistent_r0 = 0;
};

/// Threshold 8 arcsinh(1) above which the genus count applies.
double genus_regime_threshold();

/// Colors from the thick/thin decomposition:
/// ceil((g-1)/sinh^2(r0/4)) + 10(3g-3).
std::int64_t thick_thin_colors(std::int64_t g, double r0);

GenusUpper genus_upper_bound(std::int64_t g, double d);

struct GenusLower {
  bool degenerate = false;   // g below the smallest constructible genus
  std::int64_t n = 0;        // N = -1 mod 12
  std::int64_t clique = 0;   // N + 1
  std::int64_t base_genus = 0;   // min_closed_genus(N)
  std::int64_t extra_genus = 0;  // genus of the patch that closes the gap
};

GenusLower genus_lower_choice(std::int64_t g);

/// Smallest genus handled by genus_lower_choice.
std::int64_t smallest_constructible_genus();

struct FittedConstants {
  double c1 = 0;  // max over the d grid of upper / e^d
  double c2 = 0;  // min over the d grid of N / e^{d/2}
  double c3 = 0;  // max over the g grid of genus upper (large d) / g
  double c4 = 0;  // min over the g grid of clique / sqrt(g)
  double d_min = 0, d_max = 0;
  std::int64_t g_min = 0, g_max = 0;
};

/// Envelope constants fitted over d in a log grid on [d_3, 25] and
/// g in a log grid on [28, 10^6].
FittedConstants fitted_constants();

struct BoundsReport {
  std::optional<double> d;
  std::optional<std::int64_t> genus;

  std::optional<std::int64_t> upper_colors;
  std::optional<std::int64_t> upper_colors_consistent;
  std::optional<std::int64_t> lower_clique;
  std::optional<std::int64_t> lower_clique_n_reading;  // the "N" reading

  std::optional<double> r0;
  std::optional<double> phi;
  std::optional<double> phi_consistent;
  std::optional<std::int64_t> n;
  std::optional<double> t_d;
  std::optional<std::int64_t> triangle_count;
  std::optional<std::int64_t> min_genus;
  std::optional<std::int64_t> extra_genus;
  std::optional<std::string> upper_route;
  bool degenerate_lower = false;

  FittedConstants fitted;
  std::vector<std::string> notes;
};

BoundsReport report_for_distance(double d);

/// Genus report. Without d the large-d regime is reported; with d the
/// genus bound delegates to the distance bound below 8 arcsinh(1).
BoundsReport report_for_genus(std::int64_t g, std::optional<double> d);

}  // namespace hypchroma::bounds
