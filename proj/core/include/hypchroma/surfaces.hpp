#pragma once

// Surfaces assembled from hyperbolic polygons glued along sides: the ideal
// N-gon surfaces, their truncations by semi-regular right-angled 2N-gons,
// closed and holed triangle complexes from rotation systems, closures by
// pasting boundary curves, and chains of blocks.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypchroma/develop.hpp"
#include "hypchroma/rotation.hpp"

namespace hypchroma {

enum class PolygonKind { IdealRegular, SemiRegular2N, Equilateral, HoledTriangle, GenusPatch };

std::string to_string(PolygonKind kind);

/// One polygon of a glued surface.
///
/// Corner and side conventions (counter-clockwise):
///  - IdealRegular(N): N ideal corners, side k joins corners k and k+1.
///  - SemiRegular2N(N, t): 2N corners; paste side k joins corners 2k and
///    2k+1, boundary arc k (length t) joins corners 2k+1 and 2k+2.
///  - Equilateral(N) and HoledTriangle(N, t): 3 corners, side k joins
///    corners k and k+1, interior angles 2 pi / N. The holed triangle has a
///    geodesic hole of length t.
///  - GenusPatch(k, b): no sides; a genus-k surface with b boundary curves
///    of length t, purely combinatorial.
struct PolygonSpec {
  PolygonKind kind = PolygonKind::IdealRegular;
  int n = 3;
  double t = 0;
  int genus = 0;          // GenusPatch only
  int patch_boundaries = 0;  // GenusPatch only
  std::vector<int> labels;   // optional corner labels (graph vertices for triangles)

  static PolygonSpec ideal(int n);
  static PolygonSpec semi_regular(int n, double t);
  static PolygonSpec equilateral(int n);
  static PolygonSpec holed_triangle(int n, double t);
  static PolygonSpec genus_patch(int genus, int boundaries, double t);

  int side_count() const;
  int corner_count() const;
  std::pair<int, int> side_corners(int side) const;
  /// Boundary arcs running along the polygon boundary (semi-regular only).
  int arc_count() const;
  std::pair<int, int> arc_corners(int arc) const;
  /// Boundary curves inside the polygon (hole, patch boundaries).
  int internal_boundaries() const;
  int face_euler() const;
  bool ideal_corners() const { return kind == PolygonKind::IdealRegular; }
  /// False for triangles with angle 2 pi / N at or above the Euclidean one.
  bool realizable() const;
  /// Metric length of a side; infinite for ideal sides, nullopt when not realizable.
  std::optional<double> side_length(int side) const;
};

struct Pairing {
  SideRef a;
  SideRef b;
  bool reversed = false;  // orientation-reversing gluing
};

enum class BoundaryCap { Open, Funnel };

struct BoundaryCurve {
  double length = 0;
  BoundaryCap cap = BoundaryCap::Open;
  int polygon = -1;  // owning polygon for internal boundaries, -1 for arc cycles
  int arcs = 0;      // number of boundary arcs forming the curve
};

struct CliqueData {
  enum class Vertices { PolygonCenters, CornerLabels };
  Vertices vertices = Vertices::PolygonCenters;
  std::vector<int> members;  // polygon ids or graph vertex labels
  double edge_length = 0;
  /// Size counted as the polygon count (N + 1 for the N-gon constructions);
  /// n_reading is the alternative "N" reading.
  int size() const { return static_cast<int>(members.size()); }
  int n_reading = 0;
};

struct GluedSurface {
  std::string construction;
  std::vector<PolygonSpec> polygons;
  std::vector<Pairing> pairings;
  std::vector<BoundaryCurve> boundaries;
  std::vector<std::pair<int, int>> boundary_pairings;  // pasted boundary curves
  std::optional<CliqueData> clique;
};

struct EulerData {
  std::int64_t chi = 0;
  std::optional<std::int64_t> genus;  // nullopt when non-orientable
  std::int64_t boundaries = 0;        // open boundary curves after pasting
  std::int64_t cusps = 0;             // classes of ideal corners
  bool orientable = true;
  std::int64_t faces = 0, edges = 0, vertices = 0;
};

/// chi = sum of face Euler characteristics - E + V over the pasted complex,
/// ideal corners excluded; genus from chi = 2 - 2g - boundaries - cusps.
EulerData euler(const GluedSurface& s);

/// Classes of corners identified by the pairings; result[p][c] is the class
/// of corner c of polygon p.
std::vector<std::vector<int>> corner_classes(const GluedSurface& s, int* class_count = nullptr);

/// Sum of interior angles at each finite vertex class.
std::vector<double> angle_sums(const GluedSurface& s);

/// Structural audit: every side paired at most once, paired sides of equal
/// length (1e-10), connectivity. Throws the matching error kind.
void audit(const GluedSurface& s);

/// Canonical pairing for `count` polygons with count-1 sides each: the side
/// of polygon i toward polygon j has index (j - i - 1) mod count.
std::vector<Pairing> canonical_pairing(int count);
int canonical_side(int count, int from, int to);

GluedSurface build_ideal_surface(int n, std::optional<std::vector<Pairing>> pairing = std::nullopt);
GluedSurface build_truncated_surface(int n, double t, std::optional<std::vector<Pairing>> pairing = std::nullopt);

struct TriangleMode {
  bool holed = false;
  double t = 0;  // hole length; 0 selects the default sinh(t/6) = 1/4

  static TriangleMode equilateral() { return {}; }
  static TriangleMode with_holes(double t = 0) { return {true, t}; }
};

/// Triangle complex of a triangular rotation system without metric checks.
GluedSurface build_triangle_complex(const RotationSystem& rs, TriangleMode mode);

/// Metric triangle surface; requires a triangular, regular rotation system of
/// degree N >= 7. Equilateral mode gives a closed surface, holed mode one
/// boundary curve of length t per face.
GluedSurface build_triangle_surface(const RotationSystem& rs, TriangleMode mode);

/// Pastes open boundary curves in pairs (consecutively, or as given). With
/// extra_genus > 0 a genus patch with one boundary (odd count) or two
/// boundaries (even count) is attached first.
GluedSurface close_surface(const GluedSurface& f, int extra_genus = 0,
                           std::optional<std::vector<std::pair<int, int>>> boundary_pairing = std::nullopt);

/// Surface made of a single genus patch (for small topological examples).
GluedSurface patch_surface(int genus, int boundaries, double t);

/// Disjoint union; polygon and boundary indices of later parts are shifted.
GluedSurface disjoint_union(const std::vector<GluedSurface>& parts, std::vector<int>* polygon_offsets = nullptr,
                            std::vector<int>* boundary_offsets = nullptr);

struct ChainBlockInput {
  std::string label;
  RotationSystem system;
};

struct ChainBlock {
  std::string label;
  int vertices = 0;
  std::optional<int> degree;
  bool feasible = false;       // metric holed-triangle block exists
  std::string reason;          // why not, when infeasible
  int clique = 0;              // clique number of the blueprint graph
  int contribution = 0;        // clique counted toward the lower bound
  std::optional<double> edge_length;
  std::int64_t genus = 0;      // genus of the block surface
  std::int64_t boundaries = 0;
};

struct ChainDescriptor {
  std::vector<ChainBlock> blocks;
  GluedSurface surface;                   // union of feasible blocks with joins
  std::vector<std::pair<int, int>> joins;  // boundary curves joined between blocks
  int lower_bound = 0;
  std::vector<int> prefix_bounds;  // lower bound after each block
};

/// Chain of blocks, block i joined to the next feasible block along one
/// boundary geodesic. Only the first `prefix` blocks are used.
ChainDescriptor build_infinite_chain(const std::vector<ChainBlockInput>& blocks, std::size_t prefix);

/// Local frames for development; throws construction-rule for holed
/// triangles, genus patches and unrealizable polygons.
GluingView gluing_view(const GluedSurface& s);
PolygonFrame polygon_frame(const PolygonSpec& spec);

}  // namespace hypchroma
