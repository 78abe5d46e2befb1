#include "hypchroma/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hypchroma/errors.hpp"
#include "hypchroma/formulas.hpp"
#include "hypchroma/kernel.hpp"

namespace hypchroma::bounds {

namespace {

std::int64_t floor_plus_one(double x, const char* what) {
  if (!std::isfinite(x) || x >= 9.0e18) fail(ErrorKind::InvalidInput, std::string(what) + " overflows 64-bit counts");
  return static_cast<std::int64_t>(std::floor(x)) + 1;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

std::int64_t upper_bound_in_d(double d) { return floor_plus_one(formulas::phi(d), "phi(d)"); }

std::int64_t upper_bound_in_d_consistent(double d) {
  return floor_plus_one(formulas::phi_consistent(d), "degree bound");
}

LowerInD lower_bound_in_d(double d) {
  if (!std::isfinite(d) || !(d > 0.0)) fail(ErrorKind::InvalidInput, "d must be finite and > 0");
  LowerInD out;
  if (d < formulas::ideal_clique_distance(3)) {
    out.degenerate = true;
    return out;
  }
  if (d > kMaxDistance) fail(ErrorKind::InvalidInput, "d above the supported range");
  // d_N = 2 acosh(1/sin(pi/N)); invert, then correct by monotonicity. N can
  // exceed the int range for large d, so the formula is evaluated here in
  // 64-bit form.
  const auto d_of = [](std::int64_t n) { return 2.0 * std::acosh(1.0 / std::sin(kPi / static_cast<double>(n))); };
  const auto n_guess = static_cast<std::int64_t>(std::max(3.0, std::floor(kPi / std::asin(1.0 / std::cosh(0.5 * d)))));
  std::int64_t n = n_guess;
  while (n > 3 && d_of(n) > d) --n;
  while (d_of(n + 1) <= d) ++n;
  out.n = n;
  const double arg = std::cosh(0.5 * d) * std::sin(kPi / static_cast<double>(n));
  out.t_d = 2.0 * acosh_stable(std::max(arg, 1.0));
  return out;
}

std::int64_t ringel_youngs_genus(std::int64_t n) {
  if (n < 3) fail(ErrorKind::InvalidInput, "Ringel-Youngs genus needs n >= 3");
  return (n - 3) * (n - 4) / 12;
}

bool triangulation_admissible(std::int64_t n) { return n >= 11 && (n + 1) % 12 == 0; }

std::int64_t triangle_count(std::int64_t n) {
  if (!triangulation_admissible(n)) fail(ErrorKind::InvalidInput, "triangle count needs N + 1 = 0 mod 12");
  return 1 - 2 * ringel_youngs_genus(n + 1) + n * (n - 1) / 2;
}

std::int64_t min_closed_genus(std::int64_t n) {
  const std::int64_t t = triangle_count(n);
  if (t % 2 != 0) fail(ErrorKind::InternalConsistency, "odd triangle count");
  return ringel_youngs_genus(n + 1) + t / 2;
}

double printed_min_genus_formula(std::int64_t n) {
  const auto x = static_cast<double>(n);
  return x * x / 4.0 - x / 2.0 + 0.5;
}

double genus_regime_threshold() { return 8.0 * formulas::asinh_one(); }

std::int64_t thick_thin_colors(std::int64_t g, double r0) {
  if (g < 2) fail(ErrorKind::InvalidInput, "genus must be >= 2");
  if (!std::isfinite(r0) || !(r0 > 0.0)) fail(ErrorKind::InvalidInput, "r0 must be finite and > 0");
  const double s = std::sinh(0.25 * r0);
  const double balls = static_cast<double>(g - 1) / (s * s);
  // Absorb rounding so exact quotients such as (g-1)/1 stay exact.
  const auto thick = static_cast<std::int64_t>(std::ceil(balls - 1e-9 * std::max(1.0, balls)));
  return thick + 10 * (3 * g - 3);
}

GenusUpper genus_upper_bound(std::int64_t g, double d) {
  if (g < 2) fail(ErrorKind::InvalidInput, "genus must be >= 2");
  if (!std::isfinite(d) || !(d > 0.0)) fail(ErrorKind::InvalidInput, "d must be finite and > 0");
  GenusUpper out;
  out.colors_consistent_r0 = thick_thin_colors(g, 2.0 * formulas::convexity_threshold());
  if (d >= genus_regime_threshold()) {
    out.large_d = true;
    out.colors = thick_thin_colors(g, 4.0 * formulas::asinh_one());
  } else {
    out.colors = upper_bound_in_d(d);
  }
  return out;
}

std::int64_t smallest_constructible_genus() { return min_closed_genus(11); }

GenusLower genus_lower_choice(std::int64_t g) {
  GenusLower out;
  if (g < smallest_constructible_genus()) {
    out.degenerate = true;
    return out;
  }
  std::int64_t n = 11;
  while (min_closed_genus(n + 12) <= g) n += 12;
  out.n = n;
  out.clique = n + 1;
  out.base_genus = min_closed_genus(n);
  out.extra_genus = g - out.base_genus;
  return out;
}

FittedConstants fitted_constants() {
  FittedConstants c;
  c.d_min = formulas::ideal_clique_distance(3);
  c.d_max = 25.0;
  c.c2 = std::numeric_limits<double>::infinity();
  constexpr int kSteps = 64;
  for (int i = 0; i <= kSteps; ++i) {
    const double d = c.d_min * std::pow(c.d_max / c.d_min, static_cast<double>(i) / kSteps);
    c.c1 = std::max(c.c1, static_cast<double>(upper_bound_in_d(d)) / std::exp(d));
    c.c2 = std::min(c.c2, static_cast<double>(lower_bound_in_d(d).n) / std::exp(0.5 * d));
  }
  c.g_min = smallest_constructible_genus();
  c.g_max = 1000000;
  c.c4 = std::numeric_limits<double>::infinity();
  const double ratio = static_cast<double>(c.g_max) / static_cast<double>(c.g_min);
  for (int i = 0; i <= kSteps; ++i) {
    const auto g = static_cast<std::int64_t>(std::llround(c.g_min * std::pow(ratio, static_cast<double>(i) / kSteps)));
    const auto up = genus_upper_bound(g, genus_regime_threshold()).colors;
    c.c3 = std::max(c.c3, static_cast<double>(up) / static_cast<double>(g));
    c.c4 = std::min(c.c4, static_cast<double>(genus_lower_choice(g).clique) / std::sqrt(static_cast<double>(g)));
  }
  return c;
}

BoundsReport report_for_distance(double d) {
  if (!std::isfinite(d) || !(d > 0.0)) fail(ErrorKind::InvalidInput, "d must be finite and > 0");
  BoundsReport r;
  r.d = d;
  r.r0 = formulas::net_radius(d);
  r.phi = formulas::phi(d);
  r.phi_consistent = formulas::phi_consistent(d);
  r.upper_colors = upper_bound_in_d(d);
  r.upper_colors_consistent = upper_bound_in_d_consistent(d);
  r.upper_route = "phi";
  const LowerInD low = lower_bound_in_d(d);
  r.degenerate_lower = low.degenerate;
  r.lower_clique = low.clique();
  if (!low.degenerate) {
    r.n = low.n;
    r.t_d = low.t_d;
    r.lower_clique_n_reading = low.n;
  }
  r.fitted = fitted_constants();

  r.notes.push_back("upper_colors = floor(phi(d)) + 1 with phi as printed (breakpoint 10 arcsinh(1))");
  r.notes.push_back("upper_colors_consistent uses degree_bound(d, r0) with r0 = min(2d/5, arcsinh(1)), which switches at " +
                    fmt(2.5 * formulas::asinh_one()) + " instead of " + fmt(formulas::phi_breakpoint()));
  if (low.degenerate) {
    r.notes.push_back("d < d_3 = ln 3: no ideal-polygon construction; lower bound is the trivial 2");
  } else {
    r.notes.push_back("lower_clique counts the N + 1 polygon centers; lower_clique_n_reading is the N reading");
  }
  r.notes.push_back("fitted constants are envelope fits over an evaluation grid, not proven values");
  return r;
}

BoundsReport report_for_genus(std::int64_t g, std::optional<double> d) {
  if (g < 2) fail(ErrorKind::InvalidInput, "genus must be >= 2");
  BoundsReport r;
  r.genus = g;
  r.d = d;
  const double eval_d = d ? *d : genus_regime_threshold();
  const GenusUpper up = genus_upper_bound(g, eval_d);
  r.upper_colors = up.colors;
  r.upper_colors_consistent = up.colors_consistent_r0;
  if (up.large_d) {
    r.upper_route = "thick-thin";
    r.r0 = 4.0 * formulas::asinh_one();
    r.notes.push_back("thick-thin count with r0 = 4 arcsinh(1): eps = r0/2 exceeds the cylinder threshold arcsinh(1) "
                      "and the convexity threshold arcsinh(1/sqrt(2)); reported as printed");
    r.notes.push_back("upper_colors_consistent evaluates the same count at r0 = 2 arcsinh(1/sqrt(2))");
    if (!d) r.notes.push_back("no d given: large-d regime (d >= 8 arcsinh(1)) reported");
  } else {
    r.upper_route = "phi";
    r.r0 = formulas::net_radius(eval_d);
    r.phi = formulas::phi(eval_d);
    r.notes.push_back("d < 8 arcsinh(1): genus count does not apply, delegated to floor(phi(d)) + 1");
  }

  const GenusLower low = genus_lower_choice(g);
  r.degenerate_lower = low.degenerate;
  if (low.degenerate) {
    r.lower_clique = 2;
    r.notes.push_back("genus below " + std::to_string(smallest_constructible_genus()) +
                      ": no block construction; lower bound is the trivial 2");
  } else {
    r.lower_clique = low.clique;
    r.lower_clique_n_reading = low.n;
    r.n = low.n;
    r.triangle_count = triangle_count(low.n);
    r.min_genus = low.base_genus;
    r.extra_genus = low.extra_genus;
    r.notes.push_back("min_genus = g_{N+1} + T_N/2 from exact Euler arithmetic; the printed closed form gives " +
                      fmt(printed_min_genus_formula(low.n)));
  }
  r.fitted = fitted_constants();
  r.notes.push_back("fitted constants are envelope fits over an evaluation grid, not proven values");
  return r;
}

}  // namespace hypchroma::bounds
