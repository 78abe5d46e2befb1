#include <gtest/gtest.h>

#include <cmath>

#include "hypchroma/errors.hpp"
#include "hypchroma/experiment.hpp"
#include "hypchroma/formulas.hpp"
#include "hypchroma/net.hpp"

using namespace hypchroma;

TEST(Uniform, IsReproducibleAndInRange) {
  UniformSource a(9), b(9);
  for (int i = 0; i < 1000; ++i) {
    const double x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
}

TEST(Uniform, DiskSamplesFollowArea) {
  // Fraction inside radius rho is area(rho) / area(R).
  UniformSource rng(4);
  const double big = 4.0, small = 3.0;
  int inside = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const HPoint p = uniform_in_disk(rng, big);
    ASSERT_LE(p.radius(), big + 1e-12);
    if (p.radius() <= small) ++inside;
  }
  const double expected = ball_area(small) / ball_area(big);
  EXPECT_NEAR(static_cast<double>(inside) / n, expected, 5.0 * std::sqrt(expected * (1 - expected) / n));
}

TEST(DiskIndex, CandidatesAreASuperset) {
  UniformSource rng(8);
  std::vector<HPoint> pts;
  DiskIndex index(5.0, 0.5);
  for (int i = 0; i < 2000; ++i) {
    pts.push_back(uniform_in_disk(rng, 5.0));
    index.insert(i, pts.back());
  }
  for (int q = 0; q < 100; ++q) {
    const HPoint p = uniform_in_disk(rng, 5.0);
    std::vector<bool> seen(pts.size());
    index.candidates(p, 1.3, [&](int id) { seen[id] = true; });
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dist(p, pts[i]) <= 1.3) EXPECT_TRUE(seen[i]);
  }
}

class NetFixture : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { net_ = new Net(build_net(4.0, 0.4, 17)); }
  static void TearDownTestSuite() { delete net_; }
  static Net* net_;
};
Net* NetFixture::net_ = nullptr;

TEST_F(NetFixture, CentersAreSeparated) {
  const auto& c = net_->centers;
  ASSERT_GT(c.size(), 100u);
  EXPECT_NEAR(c[0].radius(), 0.0, 1e-15);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) ASSERT_GT(dist(c[i], c[j]), 0.4);
}

TEST_F(NetFixture, BallsCoverTheDisk) {
  const DiskIndex index = index_net(*net_);
  const Coloring trivial{std::vector<int>(net_->centers.size(), 0), 1};
  UniformSource rng(99);
  for (int i = 0; i < 20000; ++i)
    ASSERT_NE(point_color(*net_, index, trivial, uniform_in_disk(rng, 4.0)), kUncovered);
}

TEST_F(NetFixture, IsDeterministic) {
  const Net again = build_net(4.0, 0.4, 17);
  ASSERT_EQ(again.centers.size(), net_->centers.size());
  for (std::size_t i = 0; i < again.centers.size(); ++i)
    EXPECT_EQ(again.centers[i].coords(), net_->centers[i].coords());
  const Net other = build_net(4.0, 0.4, 18);
  EXPECT_NE(other.centers[1].coords(), net_->centers[1].coords());
}

TEST_F(NetFixture, DistanceGraphEdges) {
  const DistanceGraph g = build_distance_graph(*net_, 1.0);
  const auto& c = net_->centers;
  for (int u = 0; u < g.size(); u += 7)
    for (int v = 0; v < g.size(); ++v) {
      if (u == v) continue;
      EXPECT_EQ(g.has_edge(u, v), std::abs(dist(c[u], c[v]) - 1.0) <= 0.8) << u << ' ' << v;
    }
  EXPECT_LE(g.max_degree(), formulas::degree_bound(1.0, 0.4));
  EXPECT_THROW(build_distance_graph(*net_, 0.9), Error);
}

TEST_F(NetFixture, ValidationIndependentOfThreads) {
  const DistanceGraph g = build_distance_graph(*net_, 1.0);
  const Coloring col = greedy_color(g);
  const auto one = validate_coloring(*net_, col, 1.0, 20000, 5, 1);
  const auto four = validate_coloring(*net_, col, 1.0, 20000, 5, 4);
  EXPECT_EQ(one.trials, 20000);
  EXPECT_EQ(one.violations, 0);
  EXPECT_EQ(one.violations, four.violations);
  EXPECT_EQ(one.uncovered, four.uncovered);
}

TEST_F(NetFixture, ValidatorCatchesABadColoring) {
  const Coloring mono{std::vector<int>(net_->centers.size(), 0), 1};
  EXPECT_GT(validate_coloring(*net_, mono, 1.0, 2000, 5).violations, 0);
}

TEST(Net, MakeNetChecksSeparation) {
  std::vector<HPoint> ok{HPoint(), HPoint::from_polar(1.0, 0.0)};
  EXPECT_EQ(make_net(ok, 0.5, 2.0).centers.size(), 2u);
  std::vector<HPoint> bad{HPoint(), HPoint::from_polar(0.3, 0.0)};
  EXPECT_THROW(make_net(bad, 0.5, 2.0), Error);
}

TEST(Net, RejectsBadParameters) {
  EXPECT_THROW(build_net(-1.0, 0.4, 1), Error);
  EXPECT_THROW(build_net(4.0, 0.0, 1), Error);
}

TEST(Experiment, SmallRunIsProperAndBounded) {
  NetExperimentParams p;
  p.d = 1.0;
  p.region_radius = 4.0;
  p.trials = 5000;
  p.seed = 3;
  const NetExperiment e = run_net_experiment(p);
  EXPECT_DOUBLE_EQ(e.r0, 0.4);
  EXPECT_EQ(e.phi_plus_one, 138);
  EXPECT_EQ(e.validation.violations, 0);
  EXPECT_LE(e.coloring.count, e.graph.max_degree() + 1);
  EXPECT_LE(e.graph.max_degree(), e.degree_bound);
  EXPECT_FALSE(e.wall_time.has_value());
}

TEST(Experiment, RejectsRegime) {
  NetExperimentParams p;
  p.r0 = 0.5;
  EXPECT_THROW(run_net_experiment(p), Error);
  p.r0.reset();
  p.region_radius = 0.5;
  EXPECT_THROW(run_net_experiment(p), Error);
}
