#include "hypchroma/develop.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "hypchroma/errors.hpp"

namespace hypchroma {

namespace {

constexpr double kEndpointTolerance = 1e-10;

// Disagreement of two images of one side endpoint, measured from the side
// midpoint: angle between the two directions plus relative length error.
// Comparing positions directly loses all precision for far endpoints.
double endpoint_mismatch(const HPoint& mid, const HPoint& p, const HPoint& q) {
  const double dp = dist(mid, p);
  const double dq = dist(mid, q);
  return angle_at(mid, p, q) + std::abs(dp - dq) / std::max(1.0, std::max(dp, dq));
}

void check_side(const GluingView& view, int polygon, int side) {
  if (polygon < 0 || polygon >= static_cast<int>(view.polygons.size()))
    fail(ErrorKind::Combinatorial, "path references unknown polygon " + std::to_string(polygon));
  const auto& sides = view.polygons[polygon].sides;
  if (side < 0 || side >= static_cast<int>(sides.size())) {
    std::ostringstream os;
    os << "polygon " << polygon << " has no side " << side;
    fail(ErrorKind::Combinatorial, os.str());
  }
}

// Isometry taking the local frame of the far polygon onto the developed
// position glued across `near` of the current polygon.
Isometry gluing_map(const SideFrame& near, const SideFrame& far, bool reversed) {
  return Isometry::frame_map(far.midpoint, far.inward, near.midpoint, -near.inward, !reversed);
}

}  // namespace

DevelopedChain develop(const GluingView& view, std::span<const PathStep> path, int start_polygon) {
  if (!path.empty()) start_polygon = path.front().polygon;
  if (start_polygon < 0 || start_polygon >= static_cast<int>(view.polygons.size()))
    fail(ErrorKind::Combinatorial, "path starts in unknown polygon " + std::to_string(start_polygon));

  DevelopedChain chain;
  chain.placements.push_back({start_polygon, Isometry(), view.polygons[start_polygon].center});

  int current = start_polygon;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const PathStep& step = path[k];
    if (step.polygon != current) {
      std::ostringstream os;
      os << "path step " << k << " starts in polygon " << step.polygon << " but the chain is in polygon " << current;
      fail(ErrorKind::Combinatorial, os.str());
    }
    check_side(view, step.polygon, step.side);
    const auto& partner = view.partner.at(step.polygon).at(step.side);
    if (!partner) {
      std::ostringstream os;
      os << "side " << step.side << " of polygon " << step.polygon << " is not glued";
      fail(ErrorKind::Combinatorial, os.str());
    }
    const SideFrame& near = view.polygons[step.polygon].sides[step.side];
    const SideFrame& far = view.polygons[partner->polygon].sides[partner->side];
    const bool reversed = view.reversed.at(step.polygon).at(step.side);
    const Isometry glue = gluing_map(near, far, reversed);

    if (near.endpoints && far.endpoints) {
      // Orientation-respecting gluings swap the counter-clockwise endpoint order.
      const auto& ne = *near.endpoints;
      const auto& fe = *far.endpoints;
      const HPoint a = glue.apply(fe[0]);
      const HPoint b = glue.apply(fe[1]);
      const HPoint& mid = near.midpoint;
      const double mismatch = reversed ? std::max(endpoint_mismatch(mid, a, ne[0]), endpoint_mismatch(mid, b, ne[1]))
                                       : std::max(endpoint_mismatch(mid, a, ne[1]), endpoint_mismatch(mid, b, ne[0]));
      chain.max_endpoint_mismatch = std::max(chain.max_endpoint_mismatch, mismatch);
      // Far endpoints carry coordinates of size x0, hence rounding of x0 * eps.
      const double x0 = std::max(ne[0].coords()[0], ne[1].coords()[0]);
      const double tolerance = kEndpointTolerance + 64.0 * std::numeric_limits<double>::epsilon() * x0;
      if (mismatch > tolerance) {
        std::ostringstream os;
        os << "glued sides disagree at their endpoints (mismatch " << mismatch << ")";
        fail(ErrorKind::Combinatorial, os.str());
      }
    }

    const Isometry placed = chain.placements.back().to_plane * glue;
    chain.crossing_sides.push_back(step.side);
    current = partner->polygon;
    chain.placements.push_back({current, placed, placed.apply(view.polygons[current].center)});
  }
  return chain;
}

DevelopedChain transformed(const DevelopedChain& chain, const Isometry& global) {
  DevelopedChain out = chain;
  for (auto& p : out.placements) {
    p.to_plane = global * p.to_plane;
    p.center = global.apply(p.center);
  }
  return out;
}

}  // namespace hypchroma
