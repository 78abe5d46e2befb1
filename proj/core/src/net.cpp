#include "hypchroma/net.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hypchroma/errors.hpp"
#include "hypchroma/parallel.hpp"

namespace hypchroma {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr int kMaxBuckets = 1 << 16;

// dist(p, q) <= r, deciding by cosh(dist) = -<p, q> away from the boundary
// and by the accurate distance near it.
bool within(const HPoint& p, const HPoint& q, double r, double cosh_r) {
  const double c = -minkowski_dot(p.coords(), q.coords());
  if (c > cosh_r * (1.0 + 1e-12)) return false;
  if (c < cosh_r * (1.0 - 1e-12)) return true;
  return dist(p, q) <= r;
}

}  // namespace

HPoint uniform_in_disk(UniformSource& rng, double radius) {
  const double u = rng.next();
  const double v = rng.next();
  const double rho = 2.0 * std::asinh(std::sqrt(u) * std::sinh(0.5 * radius));
  return HPoint::from_polar(rho, kTwoPi * v);
}

// ---------------------------------------------------------------------------
// DiskIndex

DiskIndex::DiskIndex(double region_radius, double cell) : cell_(cell) {
  if (!(cell > 0.0) || !std::isfinite(cell)) fail(ErrorKind::InvalidInput, "index cell must be > 0");
  if (!(region_radius >= 0.0) || !std::isfinite(region_radius)) fail(ErrorKind::InvalidInput, "region radius must be >= 0");
  const int count = static_cast<int>(std::ceil(region_radius / cell)) + 2;
  rings_.resize(count);
  for (int k = 0; k < count; ++k) {
    Ring& ring = rings_[k];
    ring.inner = k * cell;
    ring.sinh_inner = std::sinh(ring.inner);
    const double outer = (k + 1) * cell;
    const double circumference = kTwoPi * std::sinh(outer);
    ring.buckets = k == 0 ? 1 : std::clamp(static_cast<int>(circumference / cell), 1, kMaxBuckets);
    ring.ids.resize(ring.buckets);
  }
}

int DiskIndex::ring_of(double rho) const {
  return std::min(static_cast<int>(rho / cell_), static_cast<int>(rings_.size()) - 1);
}

int DiskIndex::bucket_of(const Ring& ring, double angle) const {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return std::min(static_cast<int>(a / kTwoPi * ring.buckets), ring.buckets - 1);
}

void DiskIndex::insert(int id, const HPoint& p) {
  Ring& ring = rings_[ring_of(p.radius())];
  ring.ids[bucket_of(ring, p.angle())].push_back(id);
}

void DiskIndex::candidates(const HPoint& p, double radius, const std::function<void(int)>& visit) const {
  any_candidate(p, radius, [&](int id) {
    visit(id);
    return false;
  });
}

// ---------------------------------------------------------------------------
// Nets

Net build_net(double region_radius, double separation, std::uint64_t seed, const NetOptions& options) {
  if (!std::isfinite(region_radius) || !(region_radius > 0.0)) fail(ErrorKind::InvalidInput, "region radius R must be > 0");
  // r >= R is accepted: the net is then the base point alone.
  if (!std::isfinite(separation) || !(separation > 0.0)) fail(ErrorKind::InvalidInput, "separation r must be > 0");
  if (region_radius > 0.5 * kMaxDistance) fail(ErrorKind::InvalidInput, "region radius above the supported range");
  if (options.failure_streak < 1 || options.audit_samples < 0 || options.max_audit_rounds < 0)
    fail(ErrorKind::InvalidInput, "bad net options");

  Net net;
  net.separation = separation;
  net.region_radius = region_radius;
  net.seed = seed;
  DiskIndex index(region_radius, separation);
  const double cosh_r = std::cosh(separation);

  auto covered = [&](const HPoint& p) {
    return index.any_candidate(p, separation, [&](int id) { return within(p, net.centers[id], separation, cosh_r); });
  };
  auto add = [&](const HPoint& p) {
    index.insert(static_cast<int>(net.centers.size()), p);
    net.centers.push_back(p);
  };

  add(net.base);
  UniformSource rng(seed);
  int streak = 0;
  while (streak < options.failure_streak) {
    const HPoint p = uniform_in_disk(rng, region_radius);
    ++net.darts;
    if (covered(p)) {
      ++streak;
    } else {
      add(p);
      streak = 0;
    }
  }

  // Coverage audit: uncovered samples are more than r from every center, so
  // inserting them keeps the net separated.
  for (int round = 0; round < options.max_audit_rounds; ++round) {
    ++net.audit_rounds;
    int inserted = 0;
    for (int s = 0; s < options.audit_samples; ++s) {
      const HPoint p = uniform_in_disk(rng, region_radius);
      if (!covered(p)) {
        add(p);
        ++inserted;
      }
    }
    net.audit_insertions += inserted;
    if (inserted == 0) break;
  }
  return net;
}

Net make_net(std::vector<HPoint> centers, double separation, double region_radius) {
  if (!(separation > 0.0)) fail(ErrorKind::InvalidInput, "separation must be > 0");
  for (std::size_t i = 0; i < centers.size(); ++i)
    for (std::size_t j = i + 1; j < centers.size(); ++j)
      if (!(dist(centers[i], centers[j]) > separation))
        fail(ErrorKind::InvalidInput, "centers " + std::to_string(i) + " and " + std::to_string(j) + " are not separated");
  Net net;
  net.centers = std::move(centers);
  net.separation = separation;
  net.region_radius = region_radius;
  return net;
}

DiskIndex index_net(const Net& net) {
  double extent = net.region_radius;
  for (const auto& c : net.centers) extent = std::max(extent, c.radius());
  DiskIndex index(extent, net.separation);
  for (std::size_t i = 0; i < net.centers.size(); ++i) index.insert(static_cast<int>(i), net.centers[i]);
  return index;
}

DistanceGraph build_distance_graph(const Net& net, double d) {
  if (!std::isfinite(d) || !(d > 0.0)) fail(ErrorKind::InvalidInput, "d must be finite and > 0");
  const double r0 = net.separation;
  if (r0 > 0.4 * d * (1.0 + 1e-12)) fail(ErrorKind::InvalidInput, "net radius r0 must satisfy r0 <= 2d/5");
  DistanceGraph g;
  g.d = d;
  g.r0 = r0;
  const int n = static_cast<int>(net.centers.size());
  g.adj.assign(n, {});
  const DiskIndex index = index_net(net);
  const double lo = d - 2.0 * r0;
  const double hi = d + 2.0 * r0;
  const double cosh_hi_slack = std::cosh(hi) * (1.0 + 1e-9);
  for (int i = 0; i < n; ++i) {
    const HPoint& p = net.centers[i];
    index.candidates(p, hi, [&](int j) {
      if (j <= i) return;
      if (-minkowski_dot(p.coords(), net.centers[j].coords()) > cosh_hi_slack) return;
      const double s = dist(p, net.centers[j]);
      if (s >= lo && s <= hi) {
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
      }
    });
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

int point_color(const Net& net, const DiskIndex& index, const Coloring& coloring, const HPoint& p,
                const std::vector<int>* priority) {
  const double r = net.separation;
  const double cosh_r = std::cosh(r);
  int best = -1;
  int best_key = std::numeric_limits<int>::max();
  index.candidates(p, r, [&](int id) {
    const int key = priority ? (*priority)[id] : id;
    if (key >= best_key) return;
    if (within(p, net.centers[id], r, cosh_r)) {
      best = id;
      best_key = key;
    }
  });
  return best < 0 ? kUncovered : coloring.colors.at(best);
}

ValidationResult validate_coloring(const Net& net, const Coloring& coloring, double d, std::int64_t trials,
                                   std::uint64_t seed, int threads) {
  if (trials < 0) fail(ErrorKind::InvalidInput, "trials must be >= 0");
  if (!std::isfinite(d) || !(d > 0.0)) fail(ErrorKind::InvalidInput, "d must be finite and > 0");
  if (coloring.colors.size() != net.centers.size()) fail(ErrorKind::InvalidInput, "coloring does not match the net");
  ValidationResult total;
  total.trials = trials;
  if (trials == 0) return total;
  const double safe = net.region_radius - d;
  if (!(safe > 0.0)) fail(ErrorKind::InvalidInput, "validation needs R > d");

  const DiskIndex index = index_net(net);
  std::vector<ValidationResult> parts(kValidationShards);
  run_shards(kValidationShards, threads, [&](int shard) {
    const std::int64_t share = trials / kValidationShards + (shard < trials % kValidationShards ? 1 : 0);
    UniformSource rng(shard_seed(seed, static_cast<std::uint64_t>(shard)));
    ValidationResult& part = parts[shard];
    for (std::int64_t k = 0; k < share; ++k) {
      const HPoint x = uniform_in_disk(rng, safe);
      const double theta = kTwoPi * rng.next();
      const HPoint y = point_at(x, theta, d);
      const int cx = point_color(net, index, coloring, x);
      const int cy = point_color(net, index, coloring, y);
      if (cx == kUncovered || cy == kUncovered) {
        ++part.uncovered;
      } else if (cx == cy) {
        ++part.violations;
      }
    }
  });
  for (const auto& p : parts) {
    total.violations += p.violations;
    total.uncovered += p.uncovered;
  }
  return total;
}

}  // namespace hypchroma
