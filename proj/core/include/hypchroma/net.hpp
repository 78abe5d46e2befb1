#pragma once

// Maximal separated nets in a metric disk of the hyperbolic plane, their
// distance graphs, and the d-coloring of the disk induced by a coloring of
// the net.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "hypchroma/coloring.hpp"
#include "hypchroma/kernel.hpp"

namespace hypchroma {

/// Uniform doubles in [0, 1) from a 64-bit engine, identical on every
/// standard library (std distributions are not specified bit-for-bit).
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Point uniform (for hyperbolic area) in the disk of radius R about the origin.
HPoint uniform_in_disk(UniformSource& rng, double radius);

/// Bucket index over points of a disk about the origin: rings of fixed
/// radial width split into angular buckets of roughly the same width.
class DiskIndex {
 public:
  DiskIndex(double region_radius, double cell);

  void insert(int id, const HPoint& p);

  /// Calls visit(id) for every stored point that may lie within `radius`
  /// of p (a superset; callers recompute exact distances).
  void candidates(const HPoint& p, double radius, const std::function<void(int)>& visit) const;

  /// Same candidates, nearest rings first; stops as soon as visit(id)
  /// returns true and reports whether it did.
  template <class Visit>
  bool any_candidate(const HPoint& p, double radius, Visit&& visit) const;

 private:
  struct Ring {
    double inner = 0;
    double sinh_inner = 0;
    int buckets = 1;
    std::vector<std::vector<int>> ids;
  };

  int ring_of(double rho) const;
  int bucket_of(const Ring& ring, double angle) const;
  /// Visits the candidates of one ring; true when visit stopped the scan.
  template <class Visit>
  bool scan_ring(const Ring& ring, double rho, double sinh_rho, double theta, double radius,
                 double cosh_q_minus_1, Visit& visit) const;

  double cell_;
  std::vector<Ring> rings_;
};

template <class Visit>
bool DiskIndex::scan_ring(const Ring& ring, double rho, double sinh_rho, double theta, double radius,
                          double cosh_q_minus_1, Visit& visit) const {
  constexpr double two_pi = 2.0 * kPi;
  bool whole = ring.buckets == 1 || rho <= radius || ring.inner <= 0.0;
  double half_window = kPi;
  if (!whole) {
    // Largest angular offset of a point of this ring within `radius` of p.
    const double x = cosh_q_minus_1 / (sinh_rho * ring.sinh_inner);
    if (x >= 2.0) {
      whole = true;
    } else {
      half_window = 2.0 * std::asin(std::sqrt(0.5 * x)) * (1.0 + 1e-9) + 1e-12;
      whole = half_window >= kPi;
    }
  }
  const double width = two_pi / ring.buckets;
  const auto lo = static_cast<long long>(std::floor((theta - half_window) / width));
  const auto hi = static_cast<long long>(std::floor((theta + half_window) / width));
  if (whole || hi - lo + 1 >= ring.buckets) {
    for (const auto& bucket : ring.ids)
      for (int id : bucket)
        if (visit(id)) return true;
    return false;
  }
  for (long long b = lo; b <= hi; ++b) {
    long long idx = b % ring.buckets;
    if (idx < 0) idx += ring.buckets;
    for (int id : ring.ids[idx])
      if (visit(id)) return true;
  }
  return false;
}

template <class Visit>
bool DiskIndex::any_candidate(const HPoint& p, double radius, Visit&& visit) const {
  const double rho = p.radius();
  const double theta = p.angle();
  const double sinh_rho = std::sinh(rho);
  const int last_ring = static_cast<int>(rings_.size()) - 1;
  const int k0 = std::max(0, static_cast<int>((rho - radius) / cell_) - 1);
  const int k1 = std::min(last_ring, static_cast<int>((rho + radius) / cell_) + 1);
  const double sh = std::sinh(0.5 * radius);
  const double cosh_q_minus_1 = 2.0 * sh * sh;
  const int home = std::clamp(ring_of(rho), k0, k1);
  if (scan_ring(rings_[home], rho, sinh_rho, theta, radius, cosh_q_minus_1, visit)) return true;
  for (int step = 1; home - step >= k0 || home + step <= k1; ++step) {
    if (home - step >= k0 && scan_ring(rings_[home - step], rho, sinh_rho, theta, radius, cosh_q_minus_1, visit))
      return true;
    if (home + step <= k1 && scan_ring(rings_[home + step], rho, sinh_rho, theta, radius, cosh_q_minus_1, visit))
      return true;
  }
  return false;
}

struct NetOptions {
  int failure_streak = 5000;   // consecutive rejected darts that end throwing
  int audit_samples = 10000;   // coverage samples per audit round
  int max_audit_rounds = 100;
};

struct Net {
  std::vector<HPoint> centers;
  double separation = 0;     // r
  double region_radius = 0;  // R
  HPoint base;               // disk center (the origin)
  std::uint64_t seed = 0;
  int darts = 0;
  int audit_rounds = 0;
  int audit_insertions = 0;
};

/// Dart throwing with audited saturation. The base point is the first center.
Net build_net(double region_radius, double separation, std::uint64_t seed, const NetOptions& options = {});

/// Net with explicitly given centers (separation is checked).
Net make_net(std::vector<HPoint> centers, double separation, double region_radius);

struct DistanceGraph : Graph {
  double d = 0;
  double r0 = 0;
};

/// Edge iff |dist(c_i, c_j) - d| <= 2 r0 with r0 = net.separation.
/// Throws invalid-input when r0 > 2d/5.
DistanceGraph build_distance_graph(const Net& net, double d);

inline constexpr int kUncovered = -1;

/// Color of the lowest-index center whose closed r-ball contains p, or
/// kUncovered. With `priority`, the covering center with the smallest
/// priority value wins instead.
int point_color(const Net& net, const DiskIndex& index, const Coloring& coloring, const HPoint& p,
                const std::vector<int>* priority = nullptr);

/// Index over the centers of a net.
DiskIndex index_net(const Net& net);

struct ValidationResult {
  std::int64_t trials = 0;
  std::int64_t violations = 0;  // same-colored covered pairs at distance d
  std::int64_t uncovered = 0;   // pairs with an endpoint outside every ball
};

inline constexpr int kValidationShards = 16;

/// Samples x uniform in the disk of radius R - d, a uniform direction, and
/// y at distance d from x. Runs in kValidationShards shards with seeds
/// derived from `seed`; the result does not depend on `threads`.
ValidationResult validate_coloring(const Net& net, const Coloring& coloring, double d, std::int64_t trials,
                                   std::uint64_t seed, int threads = 1);

}  // namespace hypchroma
