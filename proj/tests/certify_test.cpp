#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "hypchroma/certify.hpp"
#include "hypchroma/checks.hpp"
#include "hypchroma/errors.hpp"
#include "hypchroma/formulas.hpp"

using namespace hypchroma;

namespace {

RotationSystem load(const char* name) {
  return load_rotation_system(std::filesystem::path(HYPCHROMA_TEST_DATA) / name);
}

}  // namespace

TEST(Certify, IdealSurfaces) {
  for (int n : {3, 4, 5}) {
    const CliqueCertificate c = certify_clique(build_ideal_surface(n), 4);
    EXPECT_EQ(c.status, CertificateStatus::Certified) << n << ": " << c.note;
    EXPECT_EQ(c.method, "development");
    ASSERT_TRUE(c.margin.has_value());
    EXPECT_GT(*c.margin, 0.0);
    EXPECT_LT(c.edge_deviation, 1e-9);
    EXPECT_EQ(c.vertices.size(), static_cast<std::size_t>(n + 1));
    EXPECT_GT(c.paths_checked, 0);
  }
}

TEST(Certify, TruncatedSurfaces) {
  for (double t : {0.1, 1.0}) {
    const CliqueCertificate c = certify_clique(build_truncated_surface(5, t), 4);
    EXPECT_EQ(c.status, CertificateStatus::Certified) << t;
    EXPECT_GT(*c.margin, 0.0);
    EXPECT_LT(c.edge_deviation, 1e-9);
    EXPECT_NEAR(c.edge_length, formulas::truncated_clique_distance(5, t), 1e-12);
  }
}

TEST(Certify, DeeperWalksOnlyLowerTheMargin) {
  const GluedSurface s = build_ideal_surface(4);
  const auto shallow = certify_clique(s, 3);
  const auto deep = certify_clique(s, 5);
  EXPECT_GE(*shallow.margin, *deep.margin - 1e-12);
  EXPECT_GT(deep.paths_checked, shallow.paths_checked);
}

TEST(Certify, TriangleSurfacesUseTheSegmentBound) {
  const auto eq = certify_clique(build_triangle_surface(load("k12.rot"), TriangleMode::equilateral()));
  EXPECT_EQ(eq.method, "segment-bound");
  EXPECT_EQ(eq.status, CertificateStatus::Certified);
  EXPECT_EQ(eq.vertices.size(), 12u);
  const auto holed = certify_clique(build_triangle_surface(load("k12.rot"), TriangleMode::with_holes()));
  EXPECT_EQ(holed.status, CertificateStatus::Certified);
  EXPECT_GT(*holed.margin, 0.0);
}

TEST(Certify, SurfaceWithoutCliqueIsRejected) {
  EXPECT_THROW(certify_clique(patch_surface(2, 0, 1.0)), Error);
}

TEST(Certify, HoledTriangleDistances) {
  const double t = formulas::default_hole_length();
  for (int n : {11, 23}) {
    const auto h = holed_triangle_distances(n, t);
    const auto m = formulas::holed_triangle_metrics(n, t);
    EXPECT_NEAR(h.side, m.side, 1e-9);
    EXPECT_NEAR(h.side, checks::holed_side_numeric(n, t), 1e-9);
    EXPECT_NEAR(h.to_hole, m.vertex_to_hole, 1e-9);
    EXPECT_GT(h.to_opposite, 0.0);
    EXPECT_GT(h.to_far_leg, 0.0);
    // The exits a competing path must pay twice exceed half the side.
    EXPECT_GT(std::min({h.to_hole, h.to_opposite, h.to_far_leg}), 0.5 * h.side);
  }
}
