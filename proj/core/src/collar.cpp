#include "hypchroma/collar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypchroma/coloring.hpp"
#include "hypchroma/errors.hpp"
#include "hypchroma/formulas.hpp"
#include "hypchroma/kernel.hpp"

namespace hypchroma::collar {

namespace {

constexpr double kDPrimeFactor = 1.0 - 1e-6;
constexpr int kMaxSections = 100000;

void require_positive(double x, const char* name) {
  if (!std::isfinite(x) || !(x > 0.0)) fail(ErrorKind::InvalidInput, std::string(name) + " must be finite and > 0");
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

// Adjacency inside one half.
std::vector<std::vector<int>> half_graph(const HalfCollar& h, double d) {
  const int k = static_cast<int>(h.sections.size());
  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const Section& a = h.sections[i];
      const Section& b = h.sections[j];
      const double gap = std::max(0.0, std::max(a.rho_bottom, b.rho_bottom) - std::min(a.rho_top, b.rho_top));
      const double top = std::max(a.rho_top, b.rho_top);
      const double span = top - std::min(a.rho_bottom, b.rho_bottom);
      const double slack = 0.5 * parallel_curve_length(h.geodesic_length, top);
      if (gap <= d && d <= span + slack) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  return adj;
}

}  // namespace

double parallel_curve_length(double geodesic_length, double rho) {
  require_positive(geodesic_length, "geodesic length");
  if (!std::isfinite(rho) || rho < 0.0) fail(ErrorKind::InvalidInput, "rho must be finite and >= 0");
  return geodesic_length * std::cosh(rho);
}

double boundary_curve_length(double geodesic_length, double thinness) {
  require_positive(geodesic_length, "geodesic length");
  require_positive(thinness, "thinness");
  return geodesic_length * std::sinh(thinness) / std::sinh(0.5 * geodesic_length);
}

HalfCollar slice_half_collar(double geodesic_length, double thinness, double d, double r0) {
  require_positive(geodesic_length, "geodesic length");
  require_positive(thinness, "thinness");
  require_positive(d, "d");
  require_positive(r0, "r0");
  if (thinness > formulas::convexity_threshold() * (1.0 + 1e-12))
    fail(ErrorKind::ParameterRegime, "eps = " + fmt(thinness) + " exceeds the convexity threshold arcsinh(1/sqrt(2)) = " +
                                         fmt(formulas::convexity_threshold()));
  if (std::sinh(thinness) < std::sinh(0.5 * geodesic_length))
    fail(ErrorKind::ParameterRegime, "sinh(eps) < sinh(l/2): the geodesic is not in the eps-thin part");

  HalfCollar h;
  h.geodesic_length = geodesic_length;
  h.thinness = thinness;
  h.d = d;
  h.r0 = r0;
  h.d_prime = d * kDPrimeFactor;
  h.boundary_distance = acosh_stable(std::sinh(thinness) / std::sinh(0.5 * geodesic_length), "K_C");
  h.boundary_length = parallel_curve_length(geodesic_length, h.boundary_distance);
  h.paper_regime = h.boundary_length <= r0 && r0 <= 0.5 * d;
  if (!(h.boundary_length < 2.0 * h.d_prime - d))
    fail(ErrorKind::ParameterRegime, "boundary curve length " + fmt(h.boundary_length) + " >= 2d' - d = " +
                                         fmt(2.0 * h.d_prime - d) + ": section heights could not exceed d/2");

  double top = h.boundary_distance;
  while (top > 0.0) {
    if (static_cast<int>(h.sections.size()) >= kMaxSections) fail(ErrorKind::InternalConsistency, "too many sections");
    const double half_curve = 0.5 * parallel_curve_length(geodesic_length, top);
    const double height = h.d_prime - half_curve;
    Section s;
    s.rho_top = top;
    s.rho_bottom = std::max(0.0, top - height);
    s.height = s.rho_top - s.rho_bottom;
    s.diam_bound = s.height + half_curve;
    h.sections.push_back(s);
    top = s.rho_bottom;
  }
  if (h.sections.empty()) {
    // K_C = 0: the half-collar is the geodesic itself.
    Section s;
    s.diam_bound = 0.5 * geodesic_length;
    h.sections.push_back(s);
  }
  return h;
}

CylinderColoring color_cylinder(const HalfCollar& upper, const HalfCollar& lower, double d) {
  require_positive(d, "d");
  CylinderColoring out;
  out.upper = upper;
  out.lower = lower;
  const int nu = static_cast<int>(upper.sections.size());
  const int nl = static_cast<int>(lower.sections.size());
  out.adjacency.assign(nu + nl, {});
  int palette = 0;
  for (int half = 0; half < 2; ++half) {
    HalfCollar& h = half == 0 ? out.upper : out.lower;
    const int offset = half == 0 ? 0 : nu;
    const auto adj = half_graph(h, d);
    Graph g(static_cast<int>(adj.size()));
    for (int i = 0; i < g.size(); ++i)
      for (int j : adj[i])
        if (j > i) g.add_edge(i, j);
    const Coloring c = greedy_color(g, ColorOrder::Natural);
    for (int i = 0; i < g.size(); ++i) {
      h.sections[i].color = palette + c.colors[i];
      for (int j : adj[i]) out.adjacency[offset + i].push_back(offset + j);
    }
    out.max_degree = std::max(out.max_degree, g.max_degree());
    palette += c.count;
  }
  out.colors_used = palette;
  return out;
}

std::int64_t cylinder_budget(std::int64_t g) {
  if (g < 2) fail(ErrorKind::InvalidInput, "genus must be >= 2");
  return 10 * (3 * g - 3);
}

}  // namespace hypchroma::collar
