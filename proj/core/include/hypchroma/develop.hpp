#pragma once

// Development of chains of glued polygons into the hyperbolic plane.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hypchroma/kernel.hpp"

namespace hypchroma {

struct SideRef {
  int polygon = 0;
  int side = 0;
  auto operator<=>(const SideRef&) const = default;
};

/// Geometry of one side in its polygon's local frame.
struct SideFrame {
  HPoint midpoint;
  Vec3 inward;  // unit tangent at the midpoint pointing into the polygon
  /// Finite endpoints in counter-clockwise order; empty for ideal sides.
  std::optional<std::array<HPoint, 2>> endpoints;
};

struct PolygonFrame {
  HPoint center;
  std::vector<SideFrame> sides;
};

/// What development needs from a glued surface: local frames plus the side
/// pairing. Paired sides are glued midpoint to midpoint; `reversed` marks an
/// orientation-reversing gluing.
struct GluingView {
  std::vector<PolygonFrame> polygons;
  std::vector<std::vector<std::optional<SideRef>>> partner;
  std::vector<std::vector<bool>> reversed;
};

/// Cross `side` of `polygon`.
struct PathStep {
  int polygon = 0;
  int side = 0;
};

struct Placement {
  int polygon = 0;
  Isometry to_plane;  // local frame -> developed plane
  HPoint center;      // developed image of the polygon center
};

struct DevelopedChain {
  std::vector<Placement> placements;
  std::vector<int> crossing_sides;  // crossing_sides[k]: side of placements[k] crossed
  double max_endpoint_mismatch = 0.0;

  HPoint image(std::size_t k, const HPoint& local) const { return placements.at(k).to_plane.apply(local); }
};

/// Develops a path starting in the polygon of path[0] (or `start_polygon`
/// when the path is empty). Each step must start in the polygon the previous
/// step crossed into. Throws combinatorial on invalid paths.
DevelopedChain develop(const GluingView& view, std::span<const PathStep> path, int start_polygon = 0);

/// The same chain moved by a global isometry.
DevelopedChain transformed(const DevelopedChain& chain, const Isometry& global);

}  // namespace hypchroma
