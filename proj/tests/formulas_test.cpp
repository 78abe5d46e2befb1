#include <gtest/gtest.h>

#include <cmath>

#include "hypchroma/checks.hpp"
#include "hypchroma/errors.hpp"
#include "hypchroma/formulas.hpp"
#include "hypchroma/kernel.hpp"

using namespace hypchroma;
using namespace hypchroma::formulas;

// Reference values computed independently in the Poincare disk with 40-digit
// arithmetic (distance from the center to the circle orthogonal to the unit
// circle through two ideal vertices, doubled).
TEST(Formulas, IdealCliqueDistanceOracle) {
  EXPECT_NEAR(ideal_clique_distance(3), 1.0986122886681097, 1e-13);
  EXPECT_NEAR(ideal_clique_distance(4), 1.7627471740390861, 1e-13);
  EXPECT_NEAR(ideal_clique_distance(5), 2.2483544313958605, 1e-13);
  EXPECT_NEAR(ideal_clique_distance(6), 2.6339157938496334, 1e-13);
  EXPECT_NEAR(ideal_clique_distance(7), 2.9546846993263603, 1e-13);
  EXPECT_NEAR(ideal_clique_distance(12), 4.0551788436002637, 1e-13);
  EXPECT_NEAR(ideal_clique_distance(3), std::log(3.0), 1e-13);
}

TEST(Formulas, IdealCliqueDistanceGrowsLikeTwoLogN) {
  // d_N = 2 arccosh(1 / sin(pi/N)) ~ 2 log(2N / pi).
  for (int n : {100, 1000, 100000}) EXPECT_NEAR(ideal_clique_distance(n), 2.0 * std::log(2.0 * n / kPi), 1e-3);
  EXPECT_THROW(ideal_clique_distance(2), Error);
}

TEST(Formulas, TruncatedDistanceOracle) {
  EXPECT_NEAR(truncated_clique_distance(5, 1.0), 2.5370581999150951, 1e-13);
  EXPECT_NEAR(solve_t(5, 3.0), 1.6982853102432757, 1e-13);
  // cosh(t/2) = cosh(d/2) sin(pi/5) at t = 1.
  const double d = truncated_clique_distance(5, 1.0);
  EXPECT_NEAR(std::cosh(0.5), std::cosh(0.5 * d) * std::sin(kPi / 5.0), 1e-12);
}

TEST(Formulas, SolveTInvertsTheDistance) {
  for (int n : {3, 4, 5, 8, 13}) {
    for (double t : {1e-3, 0.1, 0.5, 1.0, 3.0}) {
      EXPECT_NEAR(solve_t(n, truncated_clique_distance(n, t)), t, 1e-9);
    }
    EXPECT_GT(truncated_clique_distance(n, 1e-3), ideal_clique_distance(n));
  }
  EXPECT_THROW(solve_t(5, 1.0), Error);
}

TEST(Formulas, TruncatedDistanceMatchesDevelopment) {
  for (int n : {3, 4, 5, 7, 12}) {
    for (double t : {1e-6, 0.5, 1.0}) {
      EXPECT_NEAR(checks::truncated_developed_distance(n, t), truncated_clique_distance(n, t), 1e-9);
      EXPECT_NEAR(checks::truncated_distance_numeric(n, t), truncated_clique_distance(n, t), 1e-9);
    }
  }
}

TEST(Formulas, EquilateralSideOracle) {
  // cosh s = (cos a + cos^2 a) / sin^2 a for angles a = 2 pi / N.
  EXPECT_NEAR(equilateral_side(7), 1.0905496635070862, 1e-12);
  EXPECT_NEAR(equilateral_side(11), 2.3517084589899667, 1e-12);
  EXPECT_NEAR(equilateral_side(12), 2.5533737367606908, 1e-12);
  EXPECT_THROW(equilateral_side(6), Error);
}

TEST(Formulas, EquilateralRadii) {
  for (int n = 7; n < 30; ++n) {
    EXPECT_NEAR(checks::equilateral_side_numeric(n), equilateral_side(n), 1e-10);
    EXPECT_NEAR(checks::equilateral_altitude_numeric(n), equilateral_inradius(n) + equilateral_circumradius(n), 1e-10);
  }
}

TEST(Formulas, HoledTriangleOracle) {
  const double t = default_hole_length();
  EXPECT_NEAR(t, 1.4847987692835807, 1e-13);
  EXPECT_NEAR(std::sinh(t / 6.0), 0.25, 1e-15);
  const auto m11 = holed_triangle_metrics(11, t);
  EXPECT_NEAR(m11.side, 3.9420688860882763, 1e-12);
  EXPECT_NEAR(m11.vertex_to_hole, 3.336466089512158, 1e-12);
  EXPECT_NEAR(m11.margin(), 1.3654316464680199, 1e-12);
  const auto m23 = holed_triangle_metrics(23, t);
  EXPECT_NEAR(m23.side, 5.4258875448502175, 1e-12);
  EXPECT_NEAR(m23.vertex_to_hole, 4.0945496364049281, 1e-12);
}

TEST(Formulas, HoledTriangleMatchesQuadrilateral) {
  for (int n : {7, 11, 23, 47}) {
    for (double t : {0.2, default_hole_length(), 3.0}) {
      const auto m = holed_triangle_metrics(n, t);
      EXPECT_NEAR(checks::holed_side_numeric(n, t), m.side, 1e-10);
      // sinh(l'/2) = sinh(t/6) cosh(a)
      EXPECT_NEAR(std::sinh(0.5 * m.side), std::sinh(t / 6.0) * std::cosh(m.vertex_to_hole), 1e-9 * std::sinh(0.5 * m.side));
    }
  }
}

TEST(Formulas, HoleSizeMattersForTheMargin) {
  // margin -> log(1 / sinh(t/6)) as N grows: positive only for sinh(t/6) < 1.
  const double unit = 6.0 * std::asinh(1.0);
  for (int n : {7, 11, 23, 101, 1001}) {
    EXPECT_LE(holed_triangle_metrics(n, unit).margin(), 0.0) << n;
    EXPECT_GT(holed_triangle_metrics(n, default_hole_length()).margin(), 1.3) << n;
  }
  EXPECT_NEAR(holed_triangle_metrics(100001, default_hole_length()).margin(), std::log(4.0), 1e-6);
}

TEST(Formulas, DegreeBoundAtDistanceOne) {
  EXPECT_NEAR(degree_bound(1.0, 0.4), 137.65033787812888, 1e-10);
  EXPECT_THROW(degree_bound(1.0, 0.5), Error);
  // sinh^2 A - sinh^2 B = sinh(A + B) sinh(A - B): both forms agree.
  for (double d : {0.5, 1.0, 3.0, 10.0})
    EXPECT_NEAR(degree_bound_annulus(d, net_radius(d)) / degree_bound(d, net_radius(d)), 1.0, 1e-12);
}

TEST(Formulas, NetRadiusAndPhi) {
  EXPECT_DOUBLE_EQ(net_radius(1.0), 0.4);
  EXPECT_DOUBLE_EQ(net_radius(10.0), asinh_one());
  EXPECT_NEAR(phi(1.0), 137.65033787812888, 1e-10);
  EXPECT_DOUBLE_EQ(phi_breakpoint(), 10.0 * asinh_one());
  // Continuity at the breakpoint of the printed phi.
  const double b = phi_breakpoint();
  EXPECT_NEAR(phi(b) / phi(b * (1 + 1e-12)), 1.0, 1e-9);
  EXPECT_NEAR(phi_consistent(1.0), phi(1.0), 1e-9);
}

TEST(Formulas, CollarMarginAtConvexityThreshold) {
  // w - K_C -> log(sqrt 2) as l -> 0 when sinh(eps) = 1/sqrt(2).
  EXPECT_NEAR(collar_geometry(1e-6, convexity_threshold()).margin, 0.5 * std::log(2.0), 1e-4);
  EXPECT_THROW(collar_geometry(0.1, asinh_one() + 0.1), Error);
}

TEST(Formulas, CollarMarginIsPositiveBelowTheThreshold) {
  for (double eps = 0.1; eps < asinh_one() - 1e-3; eps += 0.05) {
    for (double l = 0.01; l <= 2.0 * eps; l += 0.01) {
      const auto g = collar_geometry(l, eps);
      EXPECT_GT(g.margin, 0.0) << "eps " << eps << " l " << l;
    }
  }
}

TEST(Formulas, BallAreaQuadrature) {
  for (double r : {0.1, 1.0, 5.0}) EXPECT_NEAR(checks::ball_area_quadrature(r) / ball_area(r), 1.0, 1e-10);
}
