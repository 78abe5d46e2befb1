#include "hypchroma/verify.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "hypchroma/certify.hpp"
#include "hypchroma/checks.hpp"
#include "hypchroma/errors.hpp"
#include "hypchroma/formulas.hpp"

#ifndef HYPCHROMA_DEFAULT_DATA_DIR
#define HYPCHROMA_DEFAULT_DATA_DIR "data"
#endif

namespace hypchroma {

namespace {

constexpr double kTol = 1e-9;

class Suite {
 public:
  Suite(std::string name, std::vector<CheckResult>& out) : name_(std::move(name)), out_(out) {}

  void close(const std::string& check, double got, double expected, double tol = kTol) {
    std::ostringstream os;
    os.precision(15);
    os << "got " << got << ", expected " << expected << ", tolerance " << tol;
    record(check, std::abs(got - expected) <= tol, os.str());
  }

  void record(const std::string& check, bool passed, const std::string& detail) {
    out_.push_back({name_, check, passed, detail});
  }

  // Runs fn; an exception becomes a failed check.
  void guarded(const std::string& check, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      record(check, false, std::string("error: ") + e.what());
    }
  }

 private:
  std::string name_;
  std::vector<CheckResult>& out_;
};

std::string str(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

void formulas_suite(std::vector<CheckResult>& out) {
  using namespace formulas;
  Suite s("formulas", out);
  s.guarded("d_3 = ln 3", [&] { s.close("d_3 = ln 3", ideal_clique_distance(3), std::log(3.0)); });
  for (int n : {3, 4, 5, 7, 12}) {
    const std::string tag = "N=" + std::to_string(n);
    s.guarded("ideal " + tag, [&] {
      const double dn = ideal_clique_distance(n);
      s.close("d_N vs doubled inradius " + tag, dn, 2.0 * checks::ideal_inradius_numeric(n));
      s.close("d_N vs developed centers " + tag, dn, checks::ideal_developed_distance(n));
    });
    for (double t : {1e-6, 0.5, 1.0}) {
      const std::string tt = tag + " t=" + str(t);
      s.guarded("truncated " + tt, [&] {
        const double d = truncated_clique_distance(n, t);
        s.close("dN_of_t vs developed centers " + tt, d, checks::truncated_developed_distance(n, t));
        s.close("solve_t inverts dN_of_t " + tt, solve_t(n, d), t);
        s.close("common perpendicular of paste sides " + tt, checks::truncated_distance_numeric(n, t), d);
        s.close("boundary arc length " + tt, checks::semi_regular_arc_numeric(n, t), t);
      });
    }
  }
  for (int n = 7; n <= 24; ++n) {
    const std::string tag = "N=" + std::to_string(n);
    s.guarded("equilateral " + tag, [&] {
      s.close("equilateral side " + tag, equilateral_side(n), checks::equilateral_side_numeric(n));
      s.close("altitude = inradius + circumradius " + tag, checks::equilateral_altitude_numeric(n),
              equilateral_inradius(n) + equilateral_circumradius(n));
    });
    for (double t : {default_hole_length(), 0.3, 2.0}) {
      const std::string tt = tag + " t=" + str(t);
      s.guarded("holed triangle " + tt, [&] {
        const auto m = holed_triangle_metrics(n, t);
        s.close("holed side vs quadrilateral summit " + tt, m.side, checks::holed_side_numeric(n, t));
        const auto q = solve_right_quadrilateral(t / 3.0, kPi / n);
        s.close("vertex to hole vs quadrilateral leg " + tt, m.vertex_to_hole, q.leg);
        s.close("quadrilateral law of cosines " + tt,
                checks::quadrilateral_law_of_cosines_residual(t / 3.0, kPi / n), 0.0);
      });
    }
  }
  for (double rho : {0.1, 1.0, 3.0, 6.0}) {
    s.guarded("ball area rho=" + str(rho), [&] {
      const double a = ball_area(rho);
      s.close("ball area rho=" + str(rho), checks::ball_area_quadrature(rho), a, 1e-9 * a);
    });
  }
  s.guarded("collar margin at the convexity threshold", [&] {
    s.close("collar margin at the convexity threshold", collar_geometry(1e-6, convexity_threshold()).margin,
            0.5 * std::log(2.0), 1e-4);
  });
}

void certify_surface(Suite& s, const std::string& name, const GluedSurface& surf, std::int64_t genus,
                     std::int64_t boundaries, std::int64_t cusps) {
  audit(surf);
  const EulerData e = euler(surf);
  const bool topology = e.orientable && e.genus && *e.genus == genus && e.boundaries == boundaries && e.cusps == cusps;
  s.record(name + " topology", topology,
           "genus " + (e.genus ? std::to_string(*e.genus) : std::string("n/a")) + ", boundaries " +
               std::to_string(e.boundaries) + ", cusps " + std::to_string(e.cusps));
  if (surf.clique) {
    const auto cert = certify_clique(surf);
    s.record(name + " clique certificate", cert.status == CertificateStatus::Certified,
             to_string(cert.status) + ", margin " + (cert.margin ? str(*cert.margin) : std::string("n/a")) +
                 ", edge deviation " + str(cert.edge_deviation));
  }
  const Json descriptor = surface_json(surf);
  audit_descriptor(descriptor);
  s.record(name + " descriptor round trip", true, "");
}

void surfaces_suite(std::vector<CheckResult>& out, const std::filesystem::path& dir) {
  Suite s("surfaces", out);
  for (int n : {3, 4, 5, 6}) {
    const std::string name = "ideal N=" + std::to_string(n);
    // N+1 ideal N-gons with every pair sharing one side.
    const std::int64_t faces = n + 1, edges = static_cast<std::int64_t>(n) * (n + 1) / 2;
    s.guarded(name, [&] {
      const auto surf = build_ideal_surface(n);
      const EulerData e = euler(surf);
      const std::int64_t chi = faces - edges;
      s.record(name + " chi", e.chi == chi, "chi " + std::to_string(e.chi) + ", expected " + std::to_string(chi));
      certify_surface(s, name, surf, *e.genus, 0, e.cusps);
    });
  }
  for (double t : {0.1, 1.0}) {
    const std::string name = "truncated N=5 t=" + str(t);
    s.guarded(name, [&] {
      const auto surf = build_truncated_surface(5, t);
      const EulerData e = euler(surf);
      s.record(name + " no cusps", e.cusps == 0 && e.boundaries > 0,
               "boundaries " + std::to_string(e.boundaries) + ", cusps " + std::to_string(e.cusps));
      certify_surface(s, name, surf, *e.genus, e.boundaries, 0);
    });
  }
  s.guarded("triangle complex on K7 is infeasible", [&] {
    const auto rs = load_rotation_system(dir / "k7.rot");
    try {
      build_triangle_surface(rs, TriangleMode::equilateral());
      s.record("triangle complex on K7 is infeasible", false, "construction unexpectedly succeeded");
    } catch (const Error& e) {
      s.record("triangle complex on K7 is infeasible", e.kind() == ErrorKind::GeometryInfeasible, e.what());
    }
  });
  s.guarded("patch closure genus", [&] {
    const auto patch = patch_surface(1, 3, 1.0);
    const auto closed = close_surface(patch, 2);
    const EulerData e = euler(closed);
    // chi = (2 - 2 - 3) + (2 - 4 - 1) = -6 after pasting, so genus 4.
    s.record("patch closure genus", e.genus && *e.genus == 4 && e.boundaries == 0,
             "genus " + (e.genus ? std::to_string(*e.genus) : std::string("n/a")));
  });
}

void rotation_checks(Suite& s, const std::string& label, const std::filesystem::path& path, int n,
                     std::int64_t faces, std::int64_t genus, bool triangular) {
  s.guarded(label + " file", [&] {
    const RotationSystem rs = load_rotation_system(path);
    const FaceReport f = face_report(rs);
    s.record(label + " faces", f.faces == faces,
             "got " + std::to_string(f.faces) + " faces, expected " + std::to_string(faces));
    s.record(label + " genus", f.genus == genus,
             f.genus == genus ? "genus " + std::to_string(genus)
                              : "genus mismatch: got " + std::to_string(f.genus) + ", expected " +
                                    std::to_string(genus));
    s.record(label + " triangular", f.triangular == triangular, f.triangular ? "triangular" : "not triangular");
    const bool ry = verify_ringel_youngs(rs, n);
    s.record(label + " minimal genus", ry, ry ? "" : "genus mismatch against floor((n-3)(n-4)/12)");
  });
}

void rotations_suite(std::vector<CheckResult>& out, const VerifyOptions& options) {
  Suite s("rotations", out);
  const auto dir = options.data_dir.empty() ? default_data_dir() : options.data_dir;
  rotation_checks(s, "K4", options.k4.value_or(dir / "k4.rot"), 4, 4, 0, true);
  rotation_checks(s, "K7", options.k7.value_or(dir / "k7.rot"), 7, 14, 1, true);
  const auto k12 = options.k12.value_or(dir / "k12.rot");
  if (options.k12 || std::filesystem::exists(k12)) rotation_checks(s, "K12", k12, 12, 44, 6, true);
  s.guarded("perturbed K7 is rejected", [&] {
    const RotationSystem rs = load_rotation_system(dir / "k7_perturbed.rot");
    const bool rejected = !verify_ringel_youngs(rs, 7);
    s.record("perturbed K7 is rejected", rejected, "genus " + std::to_string(genus_of(rs)));
  });
  s.guarded("search K7", [&] {
    const auto r = search_triangular_embedding(7, 1, 1000000);
    const bool ok = r.system && is_triangular(*r.system) && verify_ringel_youngs(*r.system, 7);
    s.record("search K7", ok, "nodes " + std::to_string(r.nodes));
  });
}

}  // namespace

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("HYPCHROMA_DATA_DIR"); env && *env) return env;
  return HYPCHROMA_DEFAULT_DATA_DIR;
}

std::vector<std::string> verify_suites() { return {"formulas", "surfaces", "rotations", "all"}; }

std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  const auto dir = options.data_dir.empty() ? default_data_dir() : options.data_dir;
  const bool all = suite == "all";
  if (!all && suite != "formulas" && suite != "surfaces" && suite != "rotations")
    fail(ErrorKind::InvalidInput, "unknown suite '" + suite + "'");
  if (all || suite == "formulas") formulas_suite(out);
  if (all || suite == "surfaces") surfaces_suite(out, dir);
  if (all || suite == "rotations") rotations_suite(out, options);
  return out;
}

Json to_json(const std::vector<CheckResult>& results) {
  Json j;
  std::size_t passed = 0;
  Json failures = Json::array();
  Json checks = Json::array();
  for (const auto& r : results) {
    Json c;
    c["suite"] = r.suite;
    c["name"] = r.name;
    c["passed"] = r.passed;
    c["detail"] = r.detail;
    if (r.passed)
      ++passed;
    else
      failures.push_back(c);
    checks.push_back(std::move(c));
  }
  j["passed"] = passed;
  j["total"] = results.size();
  j["ok"] = passed == results.size();
  j["failures"] = failures;
  j["checks"] = checks;
  return j;
}

}  // namespace hypchroma
