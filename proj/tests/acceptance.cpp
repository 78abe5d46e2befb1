// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "hypchroma/bounds.hpp"
#include "hypchroma/certify.hpp"
#include "hypchroma/checks.hpp"
#include "hypchroma/collar.hpp"
#include "hypchroma/errors.hpp"
#include "hypchroma/experiment.hpp"
#include "hypchroma/formulas.hpp"
#include "hypchroma/parallel.hpp"
#include "hypchroma/report.hpp"
#include "hypchroma/rotation.hpp"

using namespace hypchroma;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      if (!passed) detail << "; ";
      detail << what;
      passed = false;
    }
  }
};

std::filesystem::path data(const char* name) { return std::filesystem::path(HYPCHROMA_TEST_DATA) / name; }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x, int precision = 6) {
  std::ostringstream os;
  os.precision(precision);
  os << x;
  return os.str();
}

// 1. Formulas against developed polygons.
void formulas_vs_geometry(Outcome& o) {
  const auto start = Clock::now();
  double worst = 0;
  auto close = [&](double got, double want, const std::string& what) {
    const double err = std::abs(got - want);
    worst = std::max(worst, err);
    o.check(err <= 1e-9, what + " off by " + fmt(err));
  };
  close(formulas::ideal_clique_distance(3), std::log(3.0), "d_3 vs ln 3");
  close(2.0 * checks::ideal_inradius_numeric(3), std::log(3.0), "doubled inradius vs ln 3");
  for (int n : {3, 4, 5, 7, 12}) {
    close(formulas::ideal_clique_distance(n), checks::ideal_developed_distance(n), "d_" + std::to_string(n));
    for (double t : {1e-6, 0.5, 1.0})
      close(formulas::truncated_clique_distance(n, t), checks::truncated_developed_distance(n, t),
            "dN_of_t N=" + std::to_string(n) + " t=" + fmt(t));
  }
  const double secs = seconds_since(start);
  o.check(secs < 5.0, "runtime " + fmt(secs) + " s");
  o.detail << (o.passed ? "" : "; ") << "max error " << fmt(worst, 3) << ", " << fmt(secs, 3) << " s";
}

// 2. Collar width against the thin-part boundary.
void collar_margin(Outcome& o) {
  std::vector<double> lengths{1e-6, 1e-4, 1e-3};
  for (int k = 1; k <= 400; ++k) lengths.push_back(0.01 * k);
  std::vector<double> eps_grid;
  for (double e = 0.1; e < formulas::asinh_one() - 1e-3; e += 0.05) eps_grid.push_back(e);
  eps_grid.push_back(formulas::asinh_one() - 1e-3);
  double min_margin = INFINITY;
  int points = 0;
  for (double eps : eps_grid)
    for (double l : lengths) {
      if (std::sinh(0.5 * l) > std::sinh(eps)) continue;  // no eps-thin collar around this geodesic
      const double m = formulas::collar_geometry(l, eps).margin;
      min_margin = std::min(min_margin, m);
      ++points;
      o.check(m > 0.0, "margin " + fmt(m) + " at eps " + fmt(eps) + ", l " + fmt(l));
    }
  const double at_convexity = formulas::collar_geometry(1e-6, formulas::convexity_threshold()).margin;
  o.check(std::abs(at_convexity - 0.5 * std::log(2.0)) <= 1e-4, "margin at the convexity threshold " + fmt(at_convexity));
  double inf_at_one = INFINITY;
  for (double l : lengths)
    if (std::sinh(0.5 * l) <= 1.0) inf_at_one = std::min(inf_at_one, formulas::collar_geometry(l, formulas::asinh_one()).margin);
  o.check(inf_at_one < 1e-3, "infimum at eps = arcsinh 1 is " + fmt(inf_at_one));
  o.detail << (o.passed ? "" : "; ") << points << " grid points, min margin " << fmt(min_margin) << ", margin(1e-6) "
           << fmt(at_convexity, 8) << ", inf at arcsinh 1 " << fmt(inf_at_one, 3);
}

// 3. Net experiments at d = 1.
void net_experiments(Outcome& o) {
  const auto start = Clock::now();
  const double bound = formulas::degree_bound(1.0, 0.4);
  const std::int64_t upper = bounds::upper_bound_in_d(1.0);
  constexpr int kSeeds = 50;
  std::vector<NetExperiment> runs(kSeeds);
  run_shards(kSeeds, resolve_threads(), [&](int i) {
    NetExperimentParams p;
    p.d = 1.0;
    p.region_radius = 6.0;
    p.seed = static_cast<std::uint64_t>(i + 1);
    p.trials = 100000;
    runs[i] = run_net_experiment(p);
  });
  int max_deg = 0, max_colors = 0;
  std::int64_t violations = 0;
  for (const auto& e : runs) {
    const int deg = e.graph.max_degree();
    max_deg = std::max(max_deg, deg);
    max_colors = std::max(max_colors, e.coloring.count);
    violations += e.validation.violations;
    const std::string tag = "seed " + std::to_string(e.params.seed);
    o.check(deg <= bound, tag + " degree " + std::to_string(deg));
    o.check(e.coloring.count <= deg + 1 && deg + 1 <= upper, tag + " colors " + std::to_string(e.coloring.count));
    o.check(e.validation.violations == 0 && e.validation.trials == 100000,
            tag + " violations " + std::to_string(e.validation.violations));
  }
  const double secs = seconds_since(start);
  o.check(secs < 60.0, "runtime " + fmt(secs) + " s");
  o.detail << (o.passed ? "" : "; ") << "max degree " << max_deg << " <= " << fmt(bound, 5) << ", max colors "
           << max_colors << " <= " << upper << ", violations " << violations << ", " << fmt(secs, 3) << " s";
}

// 4. Exact chromatic number against enumeration on small induced subgraphs.
void exact_oracle(Outcome& o) {
  std::atomic<int> graphs{0}, mismatches{0};
  run_shards(200, resolve_threads(), [&](int i) {
    const Net net = build_net(2.5, 0.4, static_cast<std::uint64_t>(1000 + i));
    const DistanceGraph g = build_distance_graph(net, 1.0);
    UniformSource rng(static_cast<std::uint64_t>(i));
    for (int k = 0; k < 25; ++k) {
      // Grow a connected-ish vertex set from a random seed vertex.
      const int size = 1 + static_cast<int>(rng.raw() % 7);
      std::vector<int> vs{static_cast<int>(rng.raw() % static_cast<std::uint64_t>(g.size()))};
      for (int guard = 0; static_cast<int>(vs.size()) < size && guard < 50; ++guard) {
        const int from = vs[rng.raw() % vs.size()];
        const auto& nb = g.adj[from];
        const int next = nb.empty() || rng.next() < 0.2 ? static_cast<int>(rng.raw() % static_cast<std::uint64_t>(g.size()))
                                                        : nb[rng.raw() % nb.size()];
        if (std::find(vs.begin(), vs.end(), next) == vs.end()) vs.push_back(next);
      }
      const Graph sub = g.induced(vs);
      if (exact_chromatic(sub) != brute_force_chromatic(sub)) ++mismatches;
      ++graphs;
    }
  });
  o.check(mismatches == 0, std::to_string(mismatches.load()) + " mismatches");
  o.detail << (o.passed ? "" : "; ") << graphs.load() << " induced subgraphs from 200 nets";
}

// 5. Shipped rotation systems.
void rotation_systems(Outcome& o) {
  const auto start = Clock::now();
  const FaceReport k4 = face_report(load_rotation_system(data("k4.rot")));
  const RotationSystem k7rs = load_rotation_system(data("k7.rot"));
  const FaceReport k7 = face_report(k7rs);
  o.check(k4.faces == 4 && k4.genus == 0, "K4 faces " + std::to_string(k4.faces) + " genus " + std::to_string(k4.genus));
  o.check(k7.faces == 14 && k7.triangular && k7.genus == 1,
          "K7 faces " + std::to_string(k7.faces) + " genus " + std::to_string(k7.genus));
  o.check(verify_ringel_youngs(load_rotation_system(data("k4.rot")), 4), "K4 minimal genus");
  o.check(verify_ringel_youngs(k7rs, 7), "K7 minimal genus");
  o.check(!verify_ringel_youngs(load_rotation_system(data("k7_perturbed.rot")), 7), "perturbed K7 accepted");
  const double secs = seconds_since(start);
  o.check(secs < 1.0, "runtime " + fmt(secs) + " s");
  o.detail << (o.passed ? "" : "; ") << "K4 4 faces genus 0, K7 14 triangles genus 1, perturbed K7 rejected, "
           << fmt(secs * 1000, 3) << " ms";
}

// 6. Euler bookkeeping for N = 11.
void euler_bookkeeping(Outcome& o) {
  const auto t = bounds::triangle_count(11);
  const auto g = bounds::min_closed_genus(11);
  const double printed = bounds::printed_min_genus_formula(11);
  o.check(t == 44, "T_11 = " + std::to_string(t));
  o.check(g == 28, "min_closed_genus(11) = " + std::to_string(g));
  o.check(printed == 25.25 && printed != static_cast<double>(g), "printed closed form gives " + fmt(printed));
  o.detail << (o.passed ? "" : "; ") << "T_11 = " << t << ", genus " << g << "; printed N^2/4 - N/2 + 1/2 = "
           << printed << " disagrees (typo)";
}

// 7. Clique certificates.
void certificates(Outcome& o) {
  double min_margin = INFINITY, max_dev = 0;
  auto run = [&](const GluedSurface& s, double expected, const std::string& tag) {
    const CliqueCertificate c = certify_clique(s, 4);
    o.check(c.status == CertificateStatus::Certified && c.margin && *c.margin > 0, tag + " not certified");
    if (c.margin) min_margin = std::min(min_margin, *c.margin);
    max_dev = std::max(max_dev, c.edge_deviation);
    o.check(c.edge_deviation <= 1e-9 && std::abs(c.edge_length - expected) <= 1e-9,
            tag + " edge deviation " + fmt(c.edge_deviation));
  };
  for (int n : {3, 4, 5}) run(build_ideal_surface(n), formulas::ideal_clique_distance(n), "ideal N=" + std::to_string(n));
  for (double t : {0.1, 1.0})
    run(build_truncated_surface(5, t), formulas::truncated_clique_distance(5, t), "truncated t=" + fmt(t));
  o.detail << (o.passed ? "" : "; ") << "min margin " << fmt(min_margin) << ", max edge deviation " << fmt(max_dev, 3);
}

// 8. Genus bounds.
void genus_bounds(Outcome& o) {
  const double big = 8.0 * formulas::asinh_one();
  for (double d : {big, 10.0, 25.0})
    o.check(bounds::genus_upper_bound(2, d).colors == 31, "g=2 d=" + fmt(d) + " gives " +
                                                              std::to_string(bounds::genus_upper_bound(2, d).colors));
  o.check(bounds::genus_upper_bound(10, big).colors == 279, "g=10");
  o.check(bounds::genus_lower_choice(28).clique == 12, "clique at g=28");
  std::int64_t counterexample = -1;
  double worst = INFINITY;
  for (std::int64_t g = 28; g <= 1000000; ++g) {
    const double slack = static_cast<double>(bounds::genus_lower_choice(g).clique) - (std::sqrt(2.0 * g) - 10.0);
    if (slack < worst) worst = slack;
    if (slack < 0 && counterexample < 0) counterexample = g;
  }
  o.check(counterexample < 0, "clique(g) < sqrt(2g) - 10 at g = " + std::to_string(counterexample));
  o.detail << (o.passed ? "" : "; ") << "31, 279, 12; min slack over [28, 1e6] " << fmt(worst);
}

// 9. Collar slicing grid.
void collar_grid(Outcome& o) {
  const double eps = formulas::convexity_threshold();
  int max_degree = 0, max_colors = 0, cases = 0;
  for (double l : {0.05, 0.1, 0.5})
    for (double d : {2.0, 4.0, 8.0}) {
      const std::string tag = "l=" + fmt(l) + " d=" + fmt(d);
      const auto h = collar::slice_half_collar(l, eps, d, formulas::net_radius(d));
      for (std::size_t i = 0; i < h.sections.size(); ++i) {
        const auto& s = h.sections[i];
        if (i + 1 < h.sections.size()) o.check(s.height > 0.5 * d, tag + " short section " + std::to_string(i));
        o.check(s.diam_bound < d, tag + " diameter bound " + fmt(s.diam_bound));
      }
      const auto c = collar::color_cylinder(h, h, d);
      max_degree = std::max(max_degree, c.max_degree);
      max_colors = std::max(max_colors, c.colors_used);
      o.check(c.max_degree <= 4, tag + " degree " + std::to_string(c.max_degree));
      o.check(c.colors_used <= 10, tag + " colors " + std::to_string(c.colors_used));
      ++cases;
    }
  o.detail << (o.passed ? "" : "; ") << cases << " cases, max degree " << max_degree << ", max colors " << max_colors;
}

// 10. Exponents at d = 25 and N at d = 20.
void envelopes(Outcome& o) {
  const double d = 25.0;
  const double up = std::log(static_cast<double>(bounds::upper_bound_in_d(d))) / d;
  const double low = std::log(static_cast<double>(bounds::lower_bound_in_d(d).n)) / (0.5 * d);
  const auto n20 = bounds::lower_bound_in_d(20.0).n;
  o.check(std::abs(up - 1.0) <= 0.05, "log U(25)/25 = " + fmt(up, 4));
  o.check(std::abs(low - 1.0) <= 0.05, "log N(25)/12.5 = " + fmt(low, 4));
  o.check(n20 >= 30000 && n20 <= 40000, "N(20) = " + std::to_string(n20));
  o.detail << (o.passed ? "" : "; ") << "log U/d " << fmt(up, 4) << ", log N/(d/2) " << fmt(low, 4) << ", N(20) " << n20;
}

// 11. Seeded outputs are byte-identical.
void determinism(Outcome& o) {
  auto twice = [&](const std::string& tag, const std::function<std::string()>& fn) {
    const std::string a = fn(), b = fn();
    o.check(a == b && !a.empty(), tag + " differs");
  };
  NetExperimentParams p;
  p.region_radius = 5.0;
  p.trials = 20000;
  p.seed = 7;
  twice("net", [&] { return dump(to_json(run_net_experiment(p))); });
  const std::string one = dump(to_json(run_net_experiment(p)));
  p.threads = 4;
  o.check(one == dump(to_json(run_net_experiment(p))), "net output depends on threads");
  twice("bounds", [] { return dump(to_json(bounds::report_for_distance(3.7))); });
  twice("genus bounds", [] { return dump(to_json(bounds::report_for_genus(100, std::nullopt))); });
  twice("surface", [] { return dump(surface_json(build_truncated_surface(7, 0.3))); });
  twice("rotation search", [] {
    const auto r = search_triangular_embedding_sharded(12, 5, 4, 5000000, 4);
    return r.system ? format_rotation_system(*r.system) : std::string();
  });
  o.detail << (o.passed ? "" : "; ") << "net (1 and 4 threads), bounds, surface, rotation search";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"formula vs geometry", formulas_vs_geometry},
      {"collar margin", collar_margin},
      {"net experiments d=1 R=6", net_experiments},
      {"exact chromatic vs brute force", exact_oracle},
      {"rotation systems", rotation_systems},
      {"Euler bookkeeping", euler_bookkeeping},
      {"clique certificates", certificates},
      {"genus bounds", genus_bounds},
      {"collar slicing grid", collar_grid},
      {"asymptotic envelopes", envelopes},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    if (!o.passed) ++failed;
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, o.passed ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed;
}
