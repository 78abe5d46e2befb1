#include <gtest/gtest.h>

#include <filesystem>
#include <numeric>

#include "hypchroma/errors.hpp"
#include "hypchroma/rotation.hpp"

using namespace hypchroma;

namespace {

std::filesystem::path data(const char* name) { return std::filesystem::path(HYPCHROMA_TEST_DATA) / name; }

}  // namespace

TEST(Rotation, ShippedSystems) {
  struct Case {
    const char* file;
    std::int64_t faces, genus;
    bool triangular;
  };
  for (const Case& c : {Case{"k4.rot", 4, 0, true}, Case{"k7.rot", 14, 1, true}, Case{"k7_perturbed.rot", 12, 2, false},
                        Case{"k5_torus.rot", 5, 1, false}, Case{"k12.rot", 44, 6, true},
                        Case{"k14_minus_matching.rot", 56, 8, true}}) {
    const FaceReport f = face_report(load_rotation_system(data(c.file)));
    EXPECT_EQ(f.genus, c.genus) << c.file;
    EXPECT_EQ(f.triangular, c.triangular) << c.file;
    if (c.triangular) EXPECT_EQ(f.faces, c.faces) << c.file;
    EXPECT_EQ(f.vertices - f.edges + f.faces, 2 - 2 * f.genus) << c.file;
  }
}

TEST(Rotation, RingelYoungs) {
  EXPECT_TRUE(verify_ringel_youngs(load_rotation_system(data("k4.rot")), 4));
  EXPECT_TRUE(verify_ringel_youngs(load_rotation_system(data("k7.rot")), 7));
  EXPECT_TRUE(verify_ringel_youngs(load_rotation_system(data("k12.rot")), 12));
  EXPECT_FALSE(verify_ringel_youngs(load_rotation_system(data("k7_perturbed.rot")), 7));
  EXPECT_THROW(verify_ringel_youngs(load_rotation_system(data("k7.rot")), 8), Error);
  EXPECT_THROW(verify_ringel_youngs(load_rotation_system(data("k14_minus_matching.rot")), 14), Error);
}

TEST(Rotation, FacesCoverEveryDartOnce) {
  const RotationSystem rs = load_rotation_system(data("k12.rot"));
  std::int64_t darts = 0;
  for (const Face& f : trace_faces(rs)) darts += static_cast<std::int64_t>(f.size());
  EXPECT_EQ(darts, 2 * rs.edge_count());
}

TEST(Rotation, ParseAndFormatRoundTrip) {
  const RotationSystem rs = load_rotation_system(data("k7.rot"));
  const RotationSystem back = parse_rotation_system(format_rotation_system(rs, "round trip"));
  EXPECT_EQ(back.rotations(), rs.rotations());
}

TEST(Rotation, ParseErrors) {
  EXPECT_THROW(parse_rotation_system("0: 1\n1: 2\n2: 0\n"), Error);  // not symmetric
  EXPECT_THROW(parse_rotation_system("0: 0\n"), Error);
  EXPECT_THROW(parse_rotation_system("0: 1 1\n1: 0\n"), Error);
  EXPECT_THROW(parse_rotation_system("0 1 2\n"), Error);
  EXPECT_THROW(parse_rotation_system("0: x\n"), Error);
  EXPECT_THROW(load_rotation_system(data("missing.rot")), Error);
}

TEST(Rotation, DisconnectedIsRejected) {
  const RotationSystem rs = parse_rotation_system("0: 1\n1: 0\n2: 3\n3: 2\n");
  EXPECT_FALSE(rs.is_connected());
  EXPECT_THROW(genus_of(rs), Error);
}

TEST(Rotation, RelabelingPreservesGenus) {
  const RotationSystem rs = load_rotation_system(data("k12.rot"));
  std::vector<int> perm(12);
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  std::swap(perm[2], perm[7]);
  const RotationSystem r2 = rs.relabeled(perm);
  EXPECT_EQ(genus_of(r2), 6);
  EXPECT_TRUE(is_triangular(r2));
  EXPECT_TRUE(r2.is_complete());
  EXPECT_EQ(*r2.regular_degree(), 11);
}

TEST(Rotation, ReversingEveryRotationMirrors) {
  auto rot = load_rotation_system(data("k7.rot")).rotations();
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  EXPECT_EQ(genus_of(RotationSystem(rot)), 1);
}

TEST(Rotation, AdmissibleOrders) {
  for (int n : {3, 4, 7, 12, 15, 16, 19, 24}) EXPECT_TRUE(triangular_order_admissible(n)) << n;
  for (int n : {5, 6, 8, 9, 10, 11, 13, 14}) EXPECT_FALSE(triangular_order_admissible(n)) << n;
  EXPECT_THROW(search_triangular_embedding(5, 1, 100), Error);
}

TEST(Search, FindsTriangularEmbeddings) {
  for (int n : {4, 7, 12}) {
    const SearchResult r = search_triangular_embedding(n, 1, 5000000);
    ASSERT_TRUE(r.system.has_value()) << n;
    EXPECT_TRUE(is_triangular(*r.system));
    EXPECT_TRUE(verify_ringel_youngs(*r.system, n));
  }
}

TEST(Search, IsDeterministic) {
  const SearchResult a = search_triangular_embedding(12, 3, 5000000);
  const SearchResult b = search_triangular_embedding(12, 3, 5000000);
  ASSERT_TRUE(a.system && b.system);
  EXPECT_EQ(a.nodes, b.nodes);
  EXPECT_EQ(a.system->rotations(), b.system->rotations());
}

TEST(Search, BudgetStopsTheSearch) {
  const SearchResult r = search_triangular_embedding(12, 1, 3);
  EXPECT_FALSE(r.system.has_value());
  EXPECT_LE(r.nodes, 3);
}

TEST(Search, ShardedResultIndependentOfThreads) {
  const SearchResult one = search_triangular_embedding_sharded(12, 1, 4, 5000000, 1);
  const SearchResult four = search_triangular_embedding_sharded(12, 1, 4, 5000000, 4);
  ASSERT_TRUE(one.system && four.system);
  EXPECT_EQ(one.seed, four.seed);
  EXPECT_EQ(one.system->rotations(), four.system->rotations());
}

TEST(Search, GeneralGraph) {
  // The octahedron K_{2,2,2} embeds triangularly in the sphere.
  std::vector<std::vector<int>> adj(6);
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v)
      if (u != v && u / 2 != v / 2) adj[u].push_back(v);
  const SearchResult r = search_triangular_embedding(adj, 1, 100000);
  ASSERT_TRUE(r.system.has_value());
  EXPECT_EQ(genus_of(*r.system), 0);
  EXPECT_EQ(face_report(*r.system).faces, 8);
}
