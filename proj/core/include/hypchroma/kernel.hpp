#pragma once

// Hyperboloid model of the hyperbolic plane.
//
// Points live on the upper sheet x0^2 - x1^2 - x2^2 = 1, x0 >= 1. The bilinear
// form used throughout is  <a, b> = -a0 b0 + a1 b1 + a2 b2, so points have
// <p, p> = -1 and unit tangent vectors have <t, t> = 1. The Poincare disk is
// used for rendering and as an independent distance oracle.

#include <array>
#include <numbers>

#include <Eigen/Core>

namespace hypchroma {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = std::numbers::pi;

/// Largest distance the kernel accepts; cosh overflows long before doubles
/// run out, but precision of the hyperboloid coordinates is gone well before.
inline constexpr double kMaxDistance = 50.0;

double minkowski_dot(const Vec3& a, const Vec3& b);

/// Lorentz-equivariant cross product: <cross(a, b), a> = <cross(a, b), b> = 0.
Vec3 minkowski_cross(const Vec3& a, const Vec3& b);

/// acosh evaluated as log1p((x-1) + sqrt((x-1)(x+1))), accurate near 1.
/// Arguments in [1 - 1e-12, 1) are treated as 1; smaller ones throw
/// geometry-infeasible with `what` in the message.
double acosh_stable(double x, const char* what = "acosh argument");

class HPoint {
 public:
  /// The origin (1, 0, 0).
  HPoint();

  /// Projects (x0, x1, x2) onto the hyperboloid along the ray through the
  /// origin of R^3. Throws invalid-input for non-finite or non-timelike input.
  static HPoint from_coords(double x0, double x1, double x2);
  static HPoint from_coords(const Vec3& x);

  /// Point at hyperbolic distance `radius` from the origin in direction `angle`.
  static HPoint from_polar(double radius, double angle);

  /// Point with spatial coordinates (x1, x2); x0 is recomputed. This is the
  /// well-conditioned projection for coordinates carrying rounding error.
  static HPoint from_spatial(double x1, double x2);

  /// Point of the open unit disk (u, v) in the Poincare model.
  static HPoint from_poincare(double u, double v);

  const Vec3& coords() const { return x_; }
  double x0() const { return x_[0]; }
  double x1() const { return x_[1]; }
  double x2() const { return x_[2]; }

  /// Distance from the origin, computed from the spatial part for accuracy.
  double radius() const;
  /// Polar angle about the origin in (-pi, pi].
  double angle() const;

  std::array<double, 2> poincare() const;

  /// x0^2 - x1^2 - x2^2 - 1 relative to x0^2 (zero up to rounding).
  double constraint_residual() const;

 private:
  explicit HPoint(const Vec3& normalized) : x_(normalized) {}
  Vec3 x_;
};

double dist(const HPoint& p, const HPoint& q);

/// Distance in the Poincare disk, evaluated without the hyperboloid.
double poincare_distance(const std::array<double, 2>& u, const std::array<double, 2>& v);

/// Unit tangent at `p` for polar direction `angle`. The angle-0 direction at p
/// is the image of the x1 axis under the pure boost taking the origin to p.
Vec3 frame_direction(const HPoint& p, double angle);

/// Unit tangent at `from` pointing along the geodesic toward `to`.
Vec3 direction(const HPoint& from, const HPoint& to);

/// Exponential map: walk distance r from p along unit tangent u.
HPoint exp_map(const HPoint& p, const Vec3& unit_tangent, double r);

/// Point at distance r from p in direction angle (see frame_direction).
HPoint point_at(const HPoint& p, double angle, double r);

/// Interior angle at `vertex` between the geodesics toward a and b, in [0, pi].
double angle_at(const HPoint& vertex, const HPoint& a, const HPoint& b);

/// Point a fraction s in [0, 1] of the way from a to b along the geodesic.
HPoint geodesic_point(const HPoint& a, const HPoint& b, double s);

/// Area of a metric ball: 4 pi sinh^2(rho / 2).
double ball_area(double rho);

/// Ideal point at polar angle `angle`, as a null vector (1, cos, sin).
Vec3 ideal_point(double angle);

/// A complete geodesic, stored by its unit spacelike normal.
struct GeodesicLine {
  Vec3 normal;
};

/// Line through two points; either may be an ideal (null) vector.
GeodesicLine line_through(const Vec3& a, const Vec3& b);
GeodesicLine line_through(const HPoint& a, const HPoint& b);

double distance_to_line(const HPoint& p, const GeodesicLine& line);

/// Distance from p to the closed geodesic segment [a, b].
double distance_to_segment(const HPoint& p, const HPoint& a, const HPoint& b);

/// Length of the common perpendicular of two ultraparallel lines; 0 when the
/// lines meet or are asymptotic.
double line_separation(const GeodesicLine& l, const GeodesicLine& m);

/// Orientation-preserving or -reversing isometry, stored as a 3x3 matrix L
/// with L^T J L = J and L(0,0) > 0.
class Isometry {
 public:
  Isometry();

  /// Pure boost taking the origin to p.
  static Isometry boost_to(const HPoint& p);
  /// Rotation about the origin.
  static Isometry rotation(double angle);
  /// Translation by s along the geodesic x2 = 0.
  static Isometry translation_x(double s);
  /// The isometry taking point `from` with unit tangent `from_dir` to `to`
  /// with unit tangent `to_dir`.
  static Isometry frame_map(const HPoint& from, const Vec3& from_dir, const HPoint& to,
                            const Vec3& to_dir, bool orientation_preserving = true);

  HPoint apply(const HPoint& p) const;
  Vec3 apply_vector(const Vec3& v) const;

  Isometry operator*(const Isometry& rhs) const;
  Isometry inverse() const;

  const Mat3& matrix() const { return m_; }
  bool preserves_orientation() const;

 private:
  explicit Isometry(const Mat3& m) : m_(m) {}
  Mat3 m_;
};

/// Quadrilateral with right angles at both ends of its base and equal acute
/// angles at the two summit vertices; it is symmetric under the reflection in
/// the common perpendicular of base and summit.
struct RightQuadrilateral {
  double base = 0;           // side between the two right angles
  double summit_angle = 0;   // each of the two remaining angles
  double height = 0;         // distance between base and summit midpoints
  double leg = 0;            // side from a right angle to a summit vertex
  double half_summit = 0;
  double summit = 0;
  double diagonal = 0;       // right-angle vertex to the opposite summit vertex
};

/// Throws geometry-infeasible unless base > 0 and 0 < summit_angle < pi/2.
RightQuadrilateral solve_right_quadrilateral(double base, double summit_angle);

struct QuadrilateralVertices {
  HPoint base_left;
  HPoint base_right;
  HPoint summit_right;
  HPoint summit_left;
};

/// Places the quadrilateral with its base centered at the origin along the
/// x1 axis and its summit on the x2 > 0 side.
QuadrilateralVertices realize(const RightQuadrilateral& quad);

}  // namespace hypchroma
