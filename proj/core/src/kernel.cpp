#include "hypchroma/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Geometry>
#include <Eigen/LU>

#include "hypchroma/errors.hpp"

namespace hypchroma {

namespace {

const Mat3& lorentz_j() {
  static const Mat3 j = Eigen::Vector3d(-1.0, 1.0, 1.0).asDiagonal();
  return j;
}

bool finite(const Vec3& v) { return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]); }

double unit_norm(const Vec3& spacelike, const char* what) {
  const double n2 = minkowski_dot(spacelike, spacelike);
  if (!(n2 > 0.0)) fail(ErrorKind::InvalidInput, std::string(what) + ": degenerate tangent vector");
  return std::sqrt(n2);
}

}  // namespace

double minkowski_dot(const Vec3& a, const Vec3& b) { return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 minkowski_cross(const Vec3& a, const Vec3& b) {
  Vec3 c = a.cross(b);
  c[0] = -c[0];
  return c;
}

double acosh_stable(double x, const char* what) {
  if (std::isnan(x)) fail(ErrorKind::InvalidInput, std::string(what) + " is NaN");
  if (x < 1.0) {
    if (x >= 1.0 - 1e-12) return 0.0;
    std::ostringstream os;
    os << what << " = " << x << " < 1";
    fail(ErrorKind::GeometryInfeasible, os.str());
  }
  const double y = x - 1.0;
  return std::log1p(y + std::sqrt(y * (x + 1.0)));
}

// ---------------------------------------------------------------------------
// HPoint

HPoint::HPoint() : x_(1.0, 0.0, 0.0) {}

HPoint HPoint::from_coords(double x0, double x1, double x2) { return from_coords(Vec3(x0, x1, x2)); }

HPoint HPoint::from_coords(const Vec3& x) {
  if (!finite(x)) fail(ErrorKind::InvalidInput, "non-finite hyperboloid coordinates");
  const double q = -minkowski_dot(x, x);
  if (!(q > 0.0) || x[0] <= 0.0) fail(ErrorKind::InvalidInput, "coordinates are not on the upper timelike cone");
  // When q equals 1 up to the rounding of its terms the point is already on
  // the hyperboloid; rescaling by 1/sqrt(q) would inject an error of order
  // x0^2 * eps and ruin far points.
  const double scale = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  const double s = std::abs(q - 1.0) <= 64.0 * std::numeric_limits<double>::epsilon() * scale ? 1.0 : 1.0 / std::sqrt(q);
  const double y1 = x[1] * s;
  const double y2 = x[2] * s;
  // Recompute x0 from the spatial part so the constraint holds to rounding.
  return HPoint(Vec3(std::sqrt(1.0 + y1 * y1 + y2 * y2), y1, y2));
}

HPoint HPoint::from_spatial(double x1, double x2) {
  if (!std::isfinite(x1) || !std::isfinite(x2)) fail(ErrorKind::InvalidInput, "non-finite hyperboloid coordinates");
  return HPoint(Vec3(std::sqrt(1.0 + x1 * x1 + x2 * x2), x1, x2));
}

HPoint HPoint::from_polar(double radius, double angle) {
  if (!std::isfinite(radius) || !std::isfinite(angle) || radius < 0.0)
    fail(ErrorKind::InvalidInput, "polar coordinates must be finite with radius >= 0");
  const double sh = std::sinh(radius);
  return HPoint(Vec3(std::cosh(radius), sh * std::cos(angle), sh * std::sin(angle)));
}

HPoint HPoint::from_poincare(double u, double v) {
  const double r2 = u * u + v * v;
  if (!std::isfinite(r2) || r2 >= 1.0) fail(ErrorKind::InvalidInput, "Poincare point outside the open unit disk");
  const double k = 1.0 / (1.0 - r2);
  return from_coords(Vec3((1.0 + r2) * k, 2.0 * u * k, 2.0 * v * k));
}

double HPoint::radius() const { return std::asinh(std::hypot(x_[1], x_[2])); }

double HPoint::angle() const { return std::atan2(x_[2], x_[1]); }

std::array<double, 2> HPoint::poincare() const { return {x_[1] / (1.0 + x_[0]), x_[2] / (1.0 + x_[0])}; }

double HPoint::constraint_residual() const {
  return (-minkowski_dot(x_, x_) - 1.0) / (x_[0] * x_[0]);
}

// ---------------------------------------------------------------------------
// Metric

double dist(const HPoint& p, const HPoint& q) {
  // cosh d = -<p, q>. Near the diagonal <p - q, p - q> = 4 sinh^2(d / 2)
  // keeps relative precision; beyond d ~ 1.3 the direct form cancels less
  // (it is exact when either point is the origin).
  const double c = -minkowski_dot(p.coords(), q.coords());
  double d;
  if (c >= 2.0) {
    d = std::log(c + std::sqrt((c - 1.0) * (c + 1.0)));
  } else {
    const Vec3 v = p.coords() - q.coords();
    const double s = std::max(0.0, minkowski_dot(v, v));
    d = 2.0 * std::asinh(0.5 * std::sqrt(s));
  }
  if (d > kMaxDistance) fail(ErrorKind::InvalidInput, "distance exceeds the supported numeric range");
  return d;
}

double poincare_distance(const std::array<double, 2>& u, const std::array<double, 2>& v) {
  const double du = u[0] - v[0];
  const double dv = u[1] - v[1];
  const double num = 2.0 * (du * du + dv * dv);
  const double den = (1.0 - u[0] * u[0] - u[1] * u[1]) * (1.0 - v[0] * v[0] - v[1] * v[1]);
  return acosh_stable(1.0 + num / den, "Poincare distance");
}

double ball_area(double rho) {
  if (!std::isfinite(rho) || rho < 0.0) fail(ErrorKind::InvalidInput, "ball radius must be finite and >= 0");
  const double s = std::sinh(0.5 * rho);
  return 4.0 * kPi * s * s;
}

// ---------------------------------------------------------------------------
// Tangent directions and the exponential map

Vec3 frame_direction(const HPoint& p, double angle) {
  return Isometry::boost_to(p).apply_vector(Vec3(0.0, std::cos(angle), std::sin(angle)));
}

Vec3 direction(const HPoint& from, const HPoint& to) {
  // Read the angle off at the origin and carry the unit vector back;
  // to + <from, to> from cancels badly when `from` is far out.
  const Isometry there = Isometry::boost_to(from);
  const HPoint image = there.inverse().apply(to);
  if (image.x1() == 0.0 && image.x2() == 0.0) fail(ErrorKind::InvalidInput, "direction between coincident points");
  const double len = std::hypot(image.x1(), image.x2());
  return there.apply_vector(Vec3(0.0, image.x1() / len, image.x2() / len));
}

HPoint exp_map(const HPoint& p, const Vec3& unit_tangent, double r) {
  if (!std::isfinite(r) || r < 0.0) fail(ErrorKind::InvalidInput, "distance must be finite and >= 0");
  if (r > kMaxDistance) fail(ErrorKind::InvalidInput, "distance exceeds the supported numeric range");
  if (r == 0.0) return p;
  const Vec3 x = std::cosh(r) * p.coords() + std::sinh(r) * unit_tangent;
  return HPoint::from_spatial(x[1], x[2]);
}

HPoint point_at(const HPoint& p, double angle, double r) {
  if (!std::isfinite(angle)) fail(ErrorKind::InvalidInput, "angle must be finite");
  return exp_map(p, frame_direction(p, angle), r);
}

double angle_at(const HPoint& vertex, const HPoint& a, const HPoint& b) {
  // Move the vertex to the origin; the angle is then planar. Working with
  // tangent vectors at a far vertex cancels twice as many digits.
  const Isometry back = Isometry::boost_to(vertex).inverse();
  const HPoint pa = back.apply(a), pb = back.apply(b);
  if (pa.radius() == 0.0 || pb.radius() == 0.0) fail(ErrorKind::InvalidInput, "angle with a coincident point");
  const double cross = pa.x1() * pb.x2() - pa.x2() * pb.x1();
  const double dot = pa.x1() * pb.x1() + pa.x2() * pb.x2();
  return std::abs(std::atan2(cross, dot));
}

HPoint geodesic_point(const HPoint& a, const HPoint& b, double s) {
  const double d = dist(a, b);
  if (d == 0.0) return a;
  return exp_map(a, direction(a, b), s * d);
}

// ---------------------------------------------------------------------------
// Geodesic lines

Vec3 ideal_point(double angle) { return Vec3(1.0, std::cos(angle), std::sin(angle)); }

GeodesicLine line_through(const Vec3& a, const Vec3& b) {
  const Vec3 n = minkowski_cross(a, b);
  return {n / unit_norm(n, "line through coincident points")};
}

GeodesicLine line_through(const HPoint& a, const HPoint& b) { return line_through(a.coords(), b.coords()); }

double distance_to_line(const HPoint& p, const GeodesicLine& line) {
  return std::asinh(std::abs(minkowski_dot(p.coords(), line.normal)));
}

double distance_to_segment(const HPoint& p, const HPoint& a, const HPoint& b) {
  const double ab = dist(a, b);
  const double to_ends = std::min(dist(p, a), dist(p, b));
  if (ab == 0.0) return to_ends;
  const GeodesicLine line = line_through(a, b);
  const Vec3 foot_raw = p.coords() - minkowski_dot(p.coords(), line.normal) * line.normal;
  const HPoint foot = HPoint::from_coords(foot_raw);
  const double slack = 1e-12 * (1.0 + ab);
  if (dist(a, foot) + dist(foot, b) <= ab + slack) return std::min(to_ends, distance_to_line(p, line));
  return to_ends;
}

double line_separation(const GeodesicLine& l, const GeodesicLine& m) {
  // <n x m, n x m> = <n, m>^2 - 1 = sinh^2(t) for ultraparallel lines; the
  // cross product keeps precision when the lines are nearly asymptotic.
  const Vec3 c = minkowski_cross(l.normal, m.normal);
  const double q = minkowski_dot(c, c);
  return q <= 0.0 ? 0.0 : std::asinh(std::sqrt(q));
}

// ---------------------------------------------------------------------------
// Isometries

Isometry::Isometry() : m_(Mat3::Identity()) {}

Isometry Isometry::boost_to(const HPoint& p) {
  const double x0 = p.x0();
  const double x1 = p.x1();
  const double x2 = p.x2();
  const double k = 1.0 / (1.0 + x0);
  Mat3 m;
  m << x0, x1, x2,
       x1, 1.0 + x1 * x1 * k, x1 * x2 * k,
       x2, x1 * x2 * k, 1.0 + x2 * x2 * k;
  return Isometry(m);
}

Isometry Isometry::rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Mat3 m;
  m << 1.0, 0.0, 0.0,
       0.0, c, -s,
       0.0, s, c;
  return Isometry(m);
}

Isometry Isometry::translation_x(double s) {
  const double c = std::cosh(s);
  const double h = std::sinh(s);
  Mat3 m;
  m << c, h, 0.0,
       h, c, 0.0,
       0.0, 0.0, 1.0;
  return Isometry(m);
}

Isometry Isometry::frame_map(const HPoint& from, const Vec3& from_dir, const HPoint& to, const Vec3& to_dir,
                             bool orientation_preserving) {
  auto frame = [](const HPoint& p, const Vec3& u, double sign) {
    Mat3 f;
    f.col(0) = p.coords();
    f.col(1) = u;
    f.col(2) = sign * minkowski_cross(p.coords(), u);
    return f;
  };
  const Mat3 src = frame(from, from_dir, 1.0);
  const Mat3 dst = frame(to, to_dir, orientation_preserving ? 1.0 : -1.0);
  // A Lorentz frame F satisfies F^-1 = J F^T J.
  const Mat3& j = lorentz_j();
  return Isometry(dst * (j * src.transpose() * j));
}

HPoint Isometry::apply(const HPoint& p) const {
  const Vec3 x = m_ * p.coords();
  return HPoint::from_spatial(x[1], x[2]);
}

Vec3 Isometry::apply_vector(const Vec3& v) const { return m_ * v; }

Isometry Isometry::operator*(const Isometry& rhs) const { return Isometry(m_ * rhs.m_); }

Isometry Isometry::inverse() const {
  const Mat3& j = lorentz_j();
  return Isometry(j * m_.transpose() * j);
}

bool Isometry::preserves_orientation() const { return m_.determinant() > 0.0; }

// ---------------------------------------------------------------------------
// Quadrilateral with two right angles

RightQuadrilateral solve_right_quadrilateral(double base, double summit_angle) {
  if (std::isnan(base) || std::isnan(summit_angle)) fail(ErrorKind::InvalidInput, "quadrilateral parameters are NaN");
  if (!(base > 0.0) || !std::isfinite(base))
    fail(ErrorKind::GeometryInfeasible, "quadrilateral base must be positive and finite");
  if (!(summit_angle > 0.0 && summit_angle < 0.5 * kPi))
    fail(ErrorKind::GeometryInfeasible, "summit angle must lie in (0, pi/2)");

  // Cut along the common perpendicular: two trirectangles with acute angle
  // summit_angle and a side base/2 adjacent to the right angle opposite it.
  const double half_base = 0.5 * base;
  RightQuadrilateral q;
  q.base = base;
  q.summit_angle = summit_angle;
  q.height = std::asinh(std::cos(summit_angle) / std::sinh(half_base));
  q.half_summit = acosh_stable(std::cosh(half_base) / std::sin(summit_angle), "half summit");
  q.leg = std::asinh(std::sinh(q.height) * std::cosh(q.half_summit));
  q.summit = 2.0 * q.half_summit;
  q.diagonal = acosh_stable(std::cosh(base) * std::cosh(q.leg), "diagonal");
  return q;
}

QuadrilateralVertices realize(const RightQuadrilateral& quad) {
  const HPoint up = HPoint::from_polar(quad.leg, 0.5 * kPi);
  const Isometry left = Isometry::translation_x(-0.5 * quad.base);
  const Isometry right = Isometry::translation_x(0.5 * quad.base);
  return {left.apply(HPoint()), right.apply(HPoint()), right.apply(up), left.apply(up)};
}

}  // namespace hypchroma
