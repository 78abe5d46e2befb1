// hypchroma: bound reports, surface constructions, net experiments,
// verification suites and collar decompositions from the command line.
//
// Exit codes: 0 success, 1 domain or construction failure, 2 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hypchroma/bounds.hpp"
#include "hypchroma/certify.hpp"
#include "hypchroma/collar.hpp"
#include "hypchroma/errors.hpp"
#include "hypchroma/experiment.hpp"
#include "hypchroma/formulas.hpp"
#include "hypchroma/parallel.hpp"
#include "hypchroma/report.hpp"
#include "hypchroma/rotation.hpp"
#include "hypchroma/surfaces.hpp"
#include "hypchroma/svg.hpp"
#include "hypchroma/verify.hpp"

namespace {

using namespace hypchroma;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void usage_if(bool bad, const std::string& message) {
  if (bad) throw UsageError(message);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidInput, "cannot write '" + path + "'");
  out << text;
}

struct Output {
  std::string out;
  std::string svg;
};

void add_output(CLI::App* cmd, Output& o, bool svg) {
  cmd->add_option("--out,-o", o.out, "Write JSON here instead of stdout");
  if (svg) cmd->add_option("--svg", o.svg, "Also write an SVG picture");
}

// ---- bounds ----

struct BoundsArgs {
  std::optional<double> d;
  std::optional<std::int64_t> genus;
  Output output;
};

int run_bounds(const BoundsArgs& a) {
  usage_if(!a.d && !a.genus, "bounds needs --d or --genus");
  if (a.d) usage_if(!std::isfinite(*a.d) || *a.d <= 0.0 || *a.d > kMaxDistance, "--d must be in (0, 50]");
  bounds::BoundsReport r;
  if (a.genus) {
    usage_if(*a.genus < 2, "--genus must be >= 2");
    r = bounds::report_for_genus(*a.genus, a.d);
  } else {
    r = bounds::report_for_distance(*a.d);
  }
  write_text(a.output.out, dump(to_json(r)));
  return 0;
}

// ---- construct ----

struct ConstructArgs {
  int n = 0;
  std::optional<double> t;
  std::optional<double> d;
  std::string rotation;
  bool holed = false;
  std::optional<double> hole_t;
  int extra_genus = 0;
  std::string blocks;
  std::optional<std::size_t> prefix;
  int depth = 4;
  Output output;
};

// Emits a surface after a fresh audit and clique certificate.
int emit_surface(const GluedSurface& s, const ConstructArgs& a) {
  Json j = surface_json(s);
  audit_descriptor(j);
  if (s.clique) {
    const CliqueCertificate cert = certify_clique(s, a.depth);
    j["certificate"] = to_json(cert);
    if (cert.status != CertificateStatus::Certified)
      fail(ErrorKind::InternalConsistency, "clique certificate " + to_string(cert.status) + ": " + cert.note);
  }
  write_text(a.output.out, dump(j));
  if (!a.output.svg.empty()) write_text(a.output.svg, surface_svg(s));
  return 0;
}

int run_construct(const std::string& kind, const ConstructArgs& a) {
  usage_if(a.depth < 1, "--depth must be >= 1");
  if (kind == "ideal") {
    usage_if(a.n < 3, "--n must be >= 3");
    return emit_surface(build_ideal_surface(a.n), a);
  }
  if (kind == "truncated") {
    usage_if(a.n < 3, "--n must be >= 3");
    usage_if(a.t.has_value() == a.d.has_value(), "truncated needs exactly one of --t and --d");
    const double t = a.t ? *a.t : formulas::solve_t(a.n, *a.d);
    usage_if(!(t > 0.0) || !std::isfinite(t), "--t must be > 0");
    return emit_surface(build_truncated_surface(a.n, t), a);
  }
  if (kind == "triangle" || kind == "closed") {
    usage_if(a.rotation.empty(), kind + " needs --rotation FILE");
    usage_if(a.extra_genus < 0, "--extra-genus must be >= 0");
    const RotationSystem rs = load_rotation_system(a.rotation);
    const bool holed = a.holed || kind == "closed";
    const TriangleMode mode = holed ? TriangleMode::with_holes(a.hole_t.value_or(0.0)) : TriangleMode::equilateral();
    GluedSurface s = build_triangle_surface(rs, mode);
    if (kind == "closed") s = close_surface(s, a.extra_genus);
    return emit_surface(s, a);
  }
  if (kind == "chain") {
    usage_if(a.blocks.empty(), "chain needs --blocks label:file,...");
    std::vector<ChainBlockInput> inputs;
    std::stringstream list(a.blocks);
    for (std::string item; std::getline(list, item, ',');) {
      const auto colon = item.find(':');
      usage_if(colon == std::string::npos || colon == 0 || colon + 1 == item.size(),
               "block '" + item + "' is not label:file");
      inputs.push_back({item.substr(0, colon), load_rotation_system(item.substr(colon + 1))});
    }
    const ChainDescriptor c = build_infinite_chain(inputs, a.prefix.value_or(inputs.size()));
    Json j = to_json(c);
    audit_descriptor(j["surface"]);
    write_text(a.output.out, dump(j));
    return 0;
  }
  throw UsageError("unknown construction '" + kind + "'");
}

// ---- net ----

struct NetArgs {
  double d = 0;
  double radius = 6.0;
  std::uint64_t seed = 1;
  std::int64_t trials = 100000;
  std::optional<double> r0;
  std::string order = "dsatur";
  bool timing = false;
  Output output;
};

int run_net(const NetArgs& a) {
  usage_if(!std::isfinite(a.d) || a.d <= 0.0, "--d must be > 0");
  usage_if(!std::isfinite(a.radius) || a.radius <= a.d, "--radius must exceed --d");
  usage_if(a.radius > 0.5 * kMaxDistance, "--radius is above the supported range");
  usage_if(a.trials < 0, "--trials must be >= 0");
  if (a.r0) usage_if(!(*a.r0 > 0.0) || *a.r0 > 0.4 * a.d, "--r0 must satisfy 0 < r0 <= 2d/5");
  NetExperimentParams p;
  p.d = a.d;
  p.region_radius = a.radius;
  p.r0 = a.r0;
  p.seed = a.seed;
  p.trials = a.trials;
  p.order = a.order == "natural" ? ColorOrder::Natural
            : a.order == "largest-first" ? ColorOrder::LargestFirst
                                         : ColorOrder::DSatur;
  p.threads = default_threads();
  p.timing = a.timing;
  const NetExperiment e = run_net_experiment(p);
  write_text(a.output.out, dump(to_json(e)));
  if (!a.output.svg.empty()) write_text(a.output.svg, net_svg(e.net, e.coloring));
  return e.validation.violations == 0 ? 0 : 1;
}

// ---- verify ----

struct VerifyArgs {
  std::string suite = "all";
  std::string k4, k7, k12, data_dir;
  Output output;
};

int run_verify_cmd(const VerifyArgs& a) {
  VerifyOptions o;
  o.data_dir = a.data_dir;
  if (!a.k4.empty()) o.k4 = a.k4;
  if (!a.k7.empty()) o.k7 = a.k7;
  if (!a.k12.empty()) o.k12 = a.k12;
  const auto results = run_verify(a.suite, o);
  const Json j = to_json(results);
  write_text(a.output.out, dump(j));
  return j["ok"].get<bool>() ? 0 : 1;
}

// ---- rotation ----

struct RotationArgs {
  std::string file;
  int n = 0;
  std::uint64_t seed = 1;
  std::int64_t budget = 10000000;
  int shards = 1;
  std::string save;
  Output output;
};

int run_rotation_faces(const RotationArgs& a) {
  const RotationSystem rs = load_rotation_system(a.file);
  Json j = to_json(face_report(rs));
  if (rs.is_complete()) j["minimal_genus"] = verify_ringel_youngs(rs, rs.vertex_count());
  write_text(a.output.out, dump(j));
  return 0;
}

int run_rotation_search(const RotationArgs& a) {
  usage_if(a.n < 3, "--n must be >= 3");
  usage_if(!triangular_order_admissible(a.n), "K_n has a triangular embedding only for n = 0, 3, 4, 7 mod 12");
  usage_if(a.budget < 1 || a.shards < 1, "--budget and --shards must be >= 1");
  const SearchResult r = search_triangular_embedding_sharded(a.n, a.seed, a.shards, a.budget, default_threads());
  Json j;
  j["n"] = a.n;
  j["found"] = r.system.has_value();
  j["seed"] = r.seed;
  j["nodes"] = r.nodes;
  if (r.system) {
    j["faces"] = to_json(face_report(*r.system));
    j["rotation"] = r.system->rotations();
    if (!a.save.empty())
      write_text(a.save, format_rotation_system(*r.system, "triangular embedding of K" + std::to_string(a.n) +
                                                                " (seed " + std::to_string(r.seed) + ")"));
  }
  write_text(a.output.out, dump(j));
  return r.system ? 0 : 1;
}

// ---- collar ----

struct CollarArgs {
  double l_gamma = 0;
  double eps = 0;
  double d = 0;
  std::optional<double> r0;
  Output output;
};

int run_collar(const CollarArgs& a) {
  usage_if(!(a.l_gamma > 0.0) || !(a.eps > 0.0) || !(a.d > 0.0), "--l-gamma, --eps and --d must be > 0");
  const double r0 = a.r0.value_or(formulas::net_radius(a.d));
  usage_if(!(r0 > 0.0), "--r0 must be > 0");
  const auto half = collar::slice_half_collar(a.l_gamma, a.eps, a.d, r0);
  write_text(a.output.out, dump(to_json(collar::color_cylinder(half, half, a.d))));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic numbers of hyperbolic surfaces: bounds, constructions and experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<int> threads;
  app.add_option("--threads", threads, "Worker cap (default: HYPCHROMA_THREADS or all cores)");

  BoundsArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand("bounds", "Upper and lower bounds for a distance or a genus");
  bounds_cmd->add_option("--d", bounds_args.d, "Forbidden distance");
  bounds_cmd->add_option("--genus,-g", bounds_args.genus, "Genus of a closed surface");
  add_output(bounds_cmd, bounds_args.output, false);

  ConstructArgs construct_args;
  std::string construct_kind;
  auto* construct_cmd = app.add_subcommand("construct", "Build a lower-bound surface and certify its clique");
  construct_cmd->add_option("kind", construct_kind, "ideal | truncated | triangle | closed | chain")
      ->required()
      ->check(CLI::IsMember({"ideal", "truncated", "triangle", "closed", "chain"}));
  construct_cmd->add_option("--n", construct_args.n, "Polygon parameter N");
  construct_cmd->add_option("--t", construct_args.t, "Boundary length of the truncated polygons");
  construct_cmd->add_option("--d", construct_args.d, "Target clique distance (truncated)");
  construct_cmd->add_option("--rotation", construct_args.rotation, "Rotation-system file (triangle, closed)");
  construct_cmd->add_flag("--holed", construct_args.holed, "Holed triangles instead of equilateral ones");
  construct_cmd->add_option("--hole-t", construct_args.hole_t, "Hole length (default: sinh(t/6) = 1/4)");
  construct_cmd->add_option("--extra-genus", construct_args.extra_genus, "Genus of the closing patch");
  construct_cmd->add_option("--blocks", construct_args.blocks, "Chain blocks as label:file,...");
  construct_cmd->add_option("--prefix", construct_args.prefix, "Number of chain blocks to use");
  construct_cmd->add_option("--depth", construct_args.depth, "Certificate depth in polygons");
  add_output(construct_cmd, construct_args.output, true);

  NetArgs net_args;
  auto* net_cmd = app.add_subcommand("net", "Net coloring experiment in a disk");
  net_cmd->add_option("--d", net_args.d, "Forbidden distance")->required();
  net_cmd->add_option("--radius,-R", net_args.radius, "Disk radius");
  net_cmd->add_option("--seed", net_args.seed, "Random seed");
  net_cmd->add_option("--trials", net_args.trials, "Validation samples");
  net_cmd->add_option("--r0", net_args.r0, "Net separation (default min(2d/5, arcsinh 1))");
  net_cmd->add_option("--order", net_args.order, "Greedy order")
      ->check(CLI::IsMember({"dsatur", "natural", "largest-first"}));
  net_cmd->add_flag("--timing", net_args.timing, "Report wall time (output is then not reproducible)");
  add_output(net_cmd, net_args.output, true);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("suite", verify_args.suite, "formulas | surfaces | rotations | all")
      ->check(CLI::IsMember({"formulas", "surfaces", "rotations", "all"}));
  verify_cmd->add_option("--k4", verify_args.k4, "K4 rotation file");
  verify_cmd->add_option("--k7", verify_args.k7, "K7 rotation file");
  verify_cmd->add_option("--k12", verify_args.k12, "K12 rotation file");
  verify_cmd->add_option("--data-dir", verify_args.data_dir, "Directory with the shipped rotation files");
  add_output(verify_cmd, verify_args.output, false);

  RotationArgs rotation_args;
  auto* rotation_cmd = app.add_subcommand("rotation", "Rotation systems");
  rotation_cmd->require_subcommand(1);
  auto* faces_cmd = rotation_cmd->add_subcommand("faces", "Face report of a rotation file");
  faces_cmd->add_option("file", rotation_args.file, "Rotation file")->required();
  add_output(faces_cmd, rotation_args.output, false);
  auto* search_cmd = rotation_cmd->add_subcommand("search", "Search a triangular embedding of K_n");
  search_cmd->add_option("--n", rotation_args.n, "Order of the complete graph")->required();
  search_cmd->add_option("--seed", rotation_args.seed, "First seed");
  search_cmd->add_option("--budget", rotation_args.budget, "Search nodes per shard");
  search_cmd->add_option("--shards", rotation_args.shards, "Seeds tried (first success by index wins)");
  search_cmd->add_option("--save", rotation_args.save, "Write the rotation file here");
  add_output(search_cmd, rotation_args.output, false);

  CollarArgs collar_args;
  auto* collar_cmd = app.add_subcommand("collar", "Slice a thin cylinder and color its sections");
  collar_cmd->add_option("--l-gamma", collar_args.l_gamma, "Core geodesic length")->required();
  collar_cmd->add_option("--eps", collar_args.eps, "Thinness threshold")->required();
  collar_cmd->add_option("--d", collar_args.d, "Forbidden distance")->required();
  collar_cmd->add_option("--r0", collar_args.r0, "Net radius (default min(2d/5, arcsinh 1))");
  add_output(collar_cmd, collar_args.output, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (threads) usage_if(*threads < 1, "--threads must be >= 1");
    set_default_threads(resolve_threads(threads));
    if (*bounds_cmd) return run_bounds(bounds_args);
    if (*construct_cmd) return run_construct(construct_kind, construct_args);
    if (*net_cmd) return run_net(net_args);
    if (*verify_cmd) return run_verify_cmd(verify_args);
    if (*faces_cmd) return run_rotation_faces(rotation_args);
    if (*search_cmd) return run_rotation_search(rotation_args);
    if (*collar_cmd) return run_collar(collar_args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
