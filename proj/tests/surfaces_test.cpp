#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "hypchroma/errors.hpp"
#include "hypchroma/formulas.hpp"
#include "hypchroma/surfaces.hpp"

using namespace hypchroma;

namespace {

RotationSystem load(const char* name) {
  return load_rotation_system(std::filesystem::path(HYPCHROMA_TEST_DATA) / name);
}

void expect_euler_consistent(const EulerData& e) {
  ASSERT_TRUE(e.genus.has_value());
  EXPECT_EQ(e.chi, 2 - 2 * *e.genus - e.boundaries - e.cusps);
  EXPECT_GE(*e.genus, 0);
}

}  // namespace

TEST(Polygon, SpecConventions) {
  const auto semi = PolygonSpec::semi_regular(5, 1.0);
  EXPECT_EQ(semi.side_count(), 5);
  EXPECT_EQ(semi.corner_count(), 10);
  EXPECT_EQ(semi.arc_count(), 5);
  EXPECT_EQ(semi.side_corners(2), std::make_pair(4, 5));
  EXPECT_EQ(semi.arc_corners(4), std::make_pair(9, 0));
  EXPECT_NEAR(*semi.side_length(0), formulas::semi_regular_paste_side(5, 1.0), 1e-12);
  EXPECT_TRUE(std::isinf(*PolygonSpec::ideal(4).side_length(1)));
  EXPECT_FALSE(PolygonSpec::equilateral(6).realizable());
  EXPECT_TRUE(PolygonSpec::equilateral(7).realizable());
  EXPECT_EQ(PolygonSpec::holed_triangle(11, 1.0).internal_boundaries(), 1);
  EXPECT_NEAR(*PolygonSpec::equilateral(12).side_length(0), formulas::equilateral_side(12), 1e-12);
}

TEST(Pairing, Canonical) {
  const auto p = canonical_pairing(5);
  EXPECT_EQ(p.size(), 10u);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) {
        EXPECT_GE(canonical_side(5, i, j), 0);
        EXPECT_LT(canonical_side(5, i, j), 4);
      }
  EXPECT_EQ(canonical_side(5, 1, 3), 1);
  EXPECT_EQ(canonical_side(5, 3, 1), 2);
}

TEST(Surfaces, IdealSurfacesEuler) {
  for (int n = 3; n <= 8; ++n) {
    const GluedSurface s = build_ideal_surface(n);
    audit(s);
    const EulerData e = euler(s);
    EXPECT_EQ(e.chi, (n + 1) - n * (n + 1) / 2) << n;
    EXPECT_EQ(e.boundaries, 0);
    EXPECT_GT(e.cusps, 0);
    expect_euler_consistent(e);
    ASSERT_TRUE(s.clique.has_value());
    EXPECT_EQ(s.clique->size(), n + 1);
    EXPECT_EQ(s.clique->n_reading, n);
    EXPECT_NEAR(s.clique->edge_length, formulas::ideal_clique_distance(n), 1e-12);
  }
}

TEST(Surfaces, TruncatedSurfaces) {
  for (double t : {0.01, 0.5, 2.0}) {
    const GluedSurface s = build_truncated_surface(6, t);
    audit(s);
    const EulerData e = euler(s);
    const EulerData ideal = euler(build_ideal_surface(6));
    // Truncation turns every cusp into a boundary curve of length (arcs) * t.
    EXPECT_EQ(e.cusps, 0);
    EXPECT_EQ(e.boundaries, ideal.cusps);
    EXPECT_EQ(*e.genus, *ideal.genus);
    expect_euler_consistent(e);
    for (const auto& b : s.boundaries) EXPECT_NEAR(b.length, b.arcs * t, 1e-12);
    EXPECT_NEAR(s.clique->edge_length, formulas::truncated_clique_distance(6, t), 1e-12);
  }
  EXPECT_THROW(build_truncated_surface(5, 0.0), Error);
}

TEST(Surfaces, AngleSumsAtFiniteVertices) {
  const GluedSurface s = build_truncated_surface(5, 1.0);
  for (double a : angle_sums(s)) EXPECT_LE(a, 2.0 * kPi + 1e-9);
  const GluedSurface k12 = build_triangle_surface(load("k12.rot"), TriangleMode::equilateral());
  for (double a : angle_sums(k12)) EXPECT_NEAR(a, 2.0 * kPi, 1e-9);
}

TEST(Surfaces, EquilateralTriangleSurfaceOnK12) {
  const GluedSurface s = build_triangle_surface(load("k12.rot"), TriangleMode::equilateral());
  audit(s);
  const EulerData e = euler(s);
  EXPECT_EQ(*e.genus, 6);
  EXPECT_EQ(e.boundaries, 0);
  EXPECT_EQ(e.cusps, 0);
  EXPECT_EQ(s.polygons.size(), 44u);
  EXPECT_EQ(s.clique->size(), 12);
  EXPECT_NEAR(s.clique->edge_length, formulas::equilateral_side(11), 1e-12);
}

TEST(Surfaces, HoledTrianglesCloseToMinimalGenus) {
  const GluedSurface holed = build_triangle_surface(load("k12.rot"), TriangleMode::with_holes());
  const EulerData e = euler(holed);
  EXPECT_EQ(*e.genus, 6);
  EXPECT_EQ(e.boundaries, 44);
  for (const auto& b : holed.boundaries) EXPECT_NEAR(b.length, formulas::default_hole_length(), 1e-12);
  EXPECT_NEAR(holed.clique->edge_length, formulas::holed_triangle_metrics(11, formulas::default_hole_length()).side,
              1e-12);

  const EulerData closed = euler(close_surface(holed));
  EXPECT_EQ(*closed.genus, 28);
  EXPECT_EQ(closed.boundaries, 0);
  EXPECT_EQ(*euler(close_surface(holed, 1)).genus, 29);
  EXPECT_EQ(*euler(close_surface(holed, 5)).genus, 33);
}

TEST(Surfaces, ExplicitBoundaryPairing) {
  const GluedSurface holed = build_triangle_surface(load("k12.rot"), TriangleMode::with_holes());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 22; ++i) pairs.emplace_back(i, 43 - i);
  EXPECT_EQ(*euler(close_surface(holed, 0, pairs)).genus, 28);
  pairs.back() = {0, 1};
  EXPECT_THROW(close_surface(holed, 0, pairs), Error);
}

TEST(Surfaces, TriangleInfeasibility) {
  try {
    build_triangle_surface(load("k7.rot"), TriangleMode::equilateral());
    FAIL() << "K7 has degree 6";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GeometryInfeasible);
  }
  EXPECT_THROW(build_triangle_surface(load("k5_torus.rot"), TriangleMode::equilateral()), Error);
  // A hole far too large for the triangle.
  EXPECT_THROW(build_triangle_surface(load("k12.rot"), TriangleMode::with_holes(20.0)), Error);
  // The combinatorial complex exists regardless of the metric.
  EXPECT_EQ(*euler(build_triangle_complex(load("k7.rot"), TriangleMode::equilateral())).genus, 1);
}

TEST(Surfaces, PatchSurfaces) {
  EXPECT_EQ(*euler(patch_surface(3, 0, 1.0)).genus, 3);
  const EulerData e = euler(patch_surface(2, 4, 1.0));
  EXPECT_EQ(*e.genus, 2);
  EXPECT_EQ(e.boundaries, 4);
  EXPECT_EQ(*euler(close_surface(patch_surface(1, 3, 1.0), 2)).genus, 4);
}

TEST(Surfaces, DisjointUnion) {
  std::vector<int> poly, bnd;
  const GluedSurface u =
      disjoint_union({build_truncated_surface(5, 1.0), build_truncated_surface(4, 1.0)}, &poly, &bnd);
  EXPECT_EQ(poly, (std::vector<int>{0, 6}));
  EXPECT_EQ(u.polygons.size(), 11u);
  EXPECT_EQ(bnd[1], static_cast<int>(build_truncated_surface(5, 1.0).boundaries.size()));
  EXPECT_THROW(audit(u), Error);  // disconnected
}

TEST(Surfaces, AuditRejectsBadPairings) {
  GluedSurface s = build_ideal_surface(4);
  s.pairings.push_back(s.pairings.front());
  EXPECT_THROW(audit(s), Error);

  GluedSurface mixed;
  mixed.construction = "mixed";
  mixed.polygons = {PolygonSpec::semi_regular(5, 0.5), PolygonSpec::semi_regular(5, 1.0)};
  mixed.pairings = {Pairing{{0, 0}, {1, 0}, false}};
  EXPECT_THROW(audit(mixed), Error);

  GluedSurface out_of_range = build_ideal_surface(3);
  out_of_range.pairings[0].a.side = 7;
  EXPECT_THROW(audit(out_of_range), Error);
}

TEST(Surfaces, OrientationReversingGluingIsNonOrientable) {
  GluedSurface s = build_ideal_surface(3);
  s.pairings[0].reversed = true;
  const EulerData e = euler(s);
  EXPECT_FALSE(e.orientable);
  EXPECT_FALSE(e.genus.has_value());
}

TEST(Chain, BlocksAndPrefixes) {
  const std::vector<ChainBlockInput> blocks{{"K4", load("k4.rot")}, {"K7", load("k7.rot")}, {"K12", load("k12.rot")},
                                            {"K12b", load("k12.rot")}};
  const ChainDescriptor c = build_infinite_chain(blocks, 4);
  ASSERT_EQ(c.blocks.size(), 4u);
  EXPECT_FALSE(c.blocks[0].feasible);
  EXPECT_FALSE(c.blocks[1].feasible);
  EXPECT_TRUE(c.blocks[2].feasible);
  EXPECT_EQ(c.blocks[2].contribution, 12);
  EXPECT_EQ(c.lower_bound, 12);
  ASSERT_EQ(c.prefix_bounds.size(), 4u);
  for (std::size_t i = 1; i < c.prefix_bounds.size(); ++i) EXPECT_GE(c.prefix_bounds[i], c.prefix_bounds[i - 1]);
  EXPECT_EQ(c.joins.size(), 1u);
  audit(c.surface);
  const EulerData e = euler(c.surface);
  // Two genus-6 blocks with 44 holes each, joined along one pair of holes.
  EXPECT_EQ(*e.genus, 12);
  EXPECT_EQ(e.boundaries, 86);
  EXPECT_EQ(build_infinite_chain(blocks, 2).lower_bound, 0);
}
