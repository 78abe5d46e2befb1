#include "hypchroma/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "hypchroma/develop.hpp"

namespace hypchroma {

namespace {

// Ideal sides are drawn up to this distance from their midpoint.
constexpr double kIdealReach = 8.0;
constexpr int kSegments = 24;

std::string fill(int color) {
  if (color < 0) return "#999999";
  const double hue = std::fmod(color * 137.508, 360.0);
  char buf[40];
  std::snprintf(buf, sizeof buf, "hsl(%.1f,70%%,50%%)", hue);
  return buf;
}

struct Canvas {
  int size;
  std::ostringstream out;

  explicit Canvas(int s) : size(s) {
    out.precision(6);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    out << "<circle cx=\"" << 0.5 * size << "\" cy=\"" << 0.5 * size << "\" r=\"" << 0.5 * size - 1
        << "\" fill=\"none\" stroke=\"black\"/>\n";
  }

  std::array<double, 2> xy(const HPoint& p) const {
    const auto u = p.poincare();
    const double h = 0.5 * size - 1;
    return {0.5 * size + h * u[0], 0.5 * size - h * u[1]};
  }

  void geodesic(const HPoint& a, const HPoint& b, const char* stroke) {
    out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1\" points=\"";
    for (int i = 0; i <= kSegments; ++i) {
      const auto q = xy(geodesic_point(a, b, static_cast<double>(i) / kSegments));
      out << q[0] << ',' << q[1] << (i < kSegments ? " " : "");
    }
    out << "\"/>\n";
  }

  void dot(const HPoint& p, double radius, const std::string& color) {
    const auto q = xy(p);
    out << "<circle cx=\"" << q[0] << "\" cy=\"" << q[1] << "\" r=\"" << radius << "\" fill=\"" << color << "\"/>\n";
  }

  std::string finish() {
    out << "</svg>\n";
    return out.str();
  }
};

void draw_polygon(Canvas& c, const PolygonFrame& frame, const Isometry& place, const char* stroke) {
  for (const auto& side : frame.sides) {
    if (side.endpoints) {
      c.geodesic(place.apply((*side.endpoints)[0]), place.apply((*side.endpoints)[1]), stroke);
      continue;
    }
    // Ideal side: the geodesic through the midpoint perpendicular to `inward`.
    const Vec3 along = minkowski_cross(side.midpoint.coords(), side.inward);
    const double norm = std::sqrt(std::abs(minkowski_dot(along, along)));
    const Vec3 unit = along / norm;
    c.geodesic(place.apply(exp_map(side.midpoint, unit, kIdealReach)),
               place.apply(exp_map(side.midpoint, -unit, kIdealReach)), stroke);
  }
  c.dot(place.apply(frame.center), 3.0, "black");
}

}  // namespace

std::string net_svg(const Net& net, const Coloring& coloring, int size) {
  Canvas c(size);
  // Region boundary.
  const int steps = 180;
  c.out << "<polygon fill=\"none\" stroke=\"#444\" stroke-dasharray=\"4 3\" points=\"";
  for (int i = 0; i < steps; ++i) {
    const auto q = c.xy(HPoint::from_polar(net.region_radius, 2.0 * kPi * i / steps));
    c.out << q[0] << ',' << q[1] << (i + 1 < steps ? " " : "");
  }
  c.out << "\"/>\n";
  for (std::size_t i = 0; i < net.centers.size(); ++i) {
    const int color = i < coloring.colors.size() ? coloring.colors[i] : -1;
    c.dot(net.centers[i], 2.0, fill(color));
  }
  return c.finish();
}

std::string surface_svg(const GluedSurface& s, int size) {
  Canvas c(size);
  const GluingView view = gluing_view(s);
  if (view.polygons.empty()) return c.finish();
  draw_polygon(c, view.polygons[0], Isometry(), "black");
  for (int k = 0; k < static_cast<int>(view.partner[0].size()); ++k) {
    if (!view.partner[0][k]) continue;
    const PathStep step{0, k};
    const auto chain = develop(view, std::span<const PathStep>(&step, 1));
    const Placement& p = chain.placements.back();
    draw_polygon(c, view.polygons[p.polygon], p.to_plane, "#1f6fb2");
  }
  return c.finish();
}

}  // namespace hypchroma
