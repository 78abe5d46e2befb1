#include "hypchroma/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypchroma/errors.hpp"
#include "hypchroma/formulas.hpp"

namespace hypchroma {

namespace {

constexpr double kEdgeTolerance = 1e-9;

// Reflection in the geodesic through a and b.
Isometry reflection(const HPoint& a, const HPoint& b) {
  const Vec3 dir = direction(a, b);
  return Isometry::frame_map(a, dir, a, dir, false);
}

CliqueCertificate certify_by_development(const GluedSurface& s, int max_polygons) {
  CliqueCertificate cert;
  cert.method = "development";
  cert.vertices = s.clique->members;
  cert.edge_length = s.clique->edge_length;
  cert.depth = max_polygons;
  const GluingView view = gluing_view(s);
  const int count = static_cast<int>(s.polygons.size());

  // Adjacent centers: one crossing.
  for (int p = 0; p < count; ++p) {
    for (int k = 0; k < static_cast<int>(view.partner[p].size()); ++k) {
      if (!view.partner[p][k]) continue;
      const PathStep step{p, k};
      const auto chain = develop(view, std::span<const PathStep>(&step, 1));
      const double len = dist(chain.placements.front().center, chain.placements.back().center);
      cert.edge_deviation = std::max(cert.edge_deviation, std::abs(len - cert.edge_length));
    }
  }

  double best = std::numeric_limits<double>::infinity();
  std::vector<PathStep> path;
  // Depth-first over walks; `entry` is the side the walk entered through.
  auto walk = [&](auto&& self, int polygon, int entry) -> void {
    const int crossings = static_cast<int>(path.size());
    if (crossings >= 2 && polygon != path.front().polygon) {
      const auto chain = develop(view, path);
      ++cert.paths_checked;
      best = std::min(best, dist(chain.placements.front().center, chain.placements.back().center));
    }
    if (crossings + 1 >= max_polygons) return;
    for (int k = 0; k < static_cast<int>(view.partner[polygon].size()); ++k) {
      if (k == entry || !view.partner[polygon][k]) continue;
      path.push_back({polygon, k});
      self(self, view.partner[polygon][k]->polygon, view.partner[polygon][k]->side);
      path.pop_back();
    }
  };
  for (int p : cert.vertices) walk(walk, p, -1);

  if (cert.paths_checked == 0) {
    cert.status = CertificateStatus::Indeterminate;
    cert.note = "no alternative path within " + std::to_string(max_polygons) + " polygons";
    return cert;
  }
  cert.margin = best - cert.edge_length;
  const bool ok = *cert.margin > 0.0 && cert.edge_deviation <= kEdgeTolerance;
  cert.status = ok ? CertificateStatus::Certified : CertificateStatus::Refuted;
  if (cert.edge_deviation > kEdgeTolerance) cert.note = "adjacent centers deviate from the edge length";
  return cert;
}

CliqueCertificate certify_triangles(const GluedSurface& s, int max_polygons) {
  CliqueCertificate cert;
  cert.method = "segment-bound";
  cert.vertices = s.clique->members;
  cert.edge_length = s.clique->edge_length;
  cert.depth = max_polygons;
  const PolygonSpec& spec = s.polygons.front();
  if (!spec.realizable()) {
    cert.note = "triangles are not hyperbolic";
    return cert;
  }
  // A competing path from u to v leaves u through a whole triangle and
  // arrives at v the same way, so it is at least twice the shortest exit.
  double exit = 0.0;
  if (spec.kind == PolygonKind::Equilateral) {
    const PolygonFrame f = polygon_frame(spec);
    const auto& e0 = *f.sides[0].endpoints;
    const auto& e1 = *f.sides[1].endpoints;
    const HPoint u = e0[0], v = e0[1], w = e1[1];
    exit = distance_to_segment(u, v, w);
    cert.edge_deviation = std::abs(dist(u, v) - cert.edge_length);
    cert.note = "exit = altitude of the equilateral triangle";
  } else {
    const auto d = holed_triangle_distances(spec.n, spec.t);
    exit = std::min({d.to_opposite, d.to_hole, d.to_far_leg});
    cert.edge_deviation = std::abs(d.side - cert.edge_length);
    cert.note = "exit = min(vertex to opposite side, vertex to hole, vertex to far leg)";
  }
  cert.paths_checked = 1;
  cert.margin = 2.0 * exit - cert.edge_length;
  cert.status = *cert.margin > 0.0 && cert.edge_deviation <= kEdgeTolerance ? CertificateStatus::Certified
                                                                              : CertificateStatus::Refuted;
  return cert;
}

}  // namespace

std::string to_string(CertificateStatus status) {
  switch (status) {
    case CertificateStatus::Certified:
      return "certified";
    case CertificateStatus::Refuted:
      return "refuted";
    case CertificateStatus::Indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

HoledTriangleDistances holed_triangle_distances(int n, double t) {
  // The holed triangle is three congruent quadrilaterals: base t/3 on the
  // hole, summit a triangle side, summit angles pi/N, legs from the corners
  // perpendicular to the hole.
  const auto quad = solve_right_quadrilateral(t / 3.0, kPi / n);
  const auto q = realize(quad);
  const HPoint u = q.summit_left;
  const HPoint v = q.summit_right;
  // Neighbor across v's leg holds the side v -> w.
  const Isometry across_v = reflection(q.base_right, q.summit_right);
  const HPoint w = across_v.apply(u);
  // Neighbor across u's leg holds the side w -> u; its far leg runs from w.
  const Isometry across_u = reflection(q.base_left, q.summit_left);
  const HPoint w_other = across_u.apply(v);
  const HPoint w_foot = across_u.apply(q.base_right);

  HoledTriangleDistances d;
  d.side = dist(u, v);
  d.to_hole = quad.leg;
  d.to_opposite = distance_to_segment(u, v, w);
  d.to_far_leg = distance_to_segment(u, w_other, w_foot);
  return d;
}

CliqueCertificate certify_clique(const GluedSurface& s, int max_polygons) {
  if (!s.clique) fail(ErrorKind::InvalidInput, "surface carries no clique data");
  if (max_polygons < 1) fail(ErrorKind::InvalidInput, "max_polygons must be >= 1");
  if (s.polygons.empty()) fail(ErrorKind::InvalidInput, "empty surface");
  if (s.clique->vertices == CliqueData::Vertices::CornerLabels) return certify_triangles(s, max_polygons);
  return certify_by_development(s, max_polygons);
}

}  // namespace hypchroma
