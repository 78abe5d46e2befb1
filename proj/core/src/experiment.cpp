#include "hypchroma/experiment.hpp"

#include <chrono>
#include <cmath>

#include "hypchroma/bounds.hpp"
#include "hypchroma/errors.hpp"
#include "hypchroma/formulas.hpp"

namespace hypchroma {

NetExperiment run_net_experiment(const NetExperimentParams& params) {
  const auto start = std::chrono::steady_clock::now();
  if (!std::isfinite(params.d) || !(params.d > 0.0)) fail(ErrorKind::InvalidInput, "d must be finite and > 0");
  if (!(params.region_radius > params.d)) fail(ErrorKind::InvalidInput, "radius R must exceed d");
  if (params.trials < 0) fail(ErrorKind::InvalidInput, "trials must be >= 0");

  NetExperiment out;
  out.params = params;
  out.r0 = params.r0.value_or(formulas::net_radius(params.d));
  if (!(out.r0 > 0.0)) fail(ErrorKind::InvalidInput, "r0 must be > 0");
  if (out.r0 > 0.4 * params.d * (1.0 + 1e-12)) fail(ErrorKind::InvalidInput, "r0 must satisfy r0 <= 2d/5");

  out.net = build_net(params.region_radius, out.r0, params.seed);
  out.graph = build_distance_graph(out.net, params.d);
  out.coloring = greedy_color(out.graph, params.order);
  out.degree_bound = formulas::degree_bound(params.d, out.r0);
  out.phi_plus_one = bounds::upper_bound_in_d(params.d);
  out.validation = validate_coloring(out.net, out.coloring, params.d, params.trials, params.seed, params.threads);
  if (params.timing)
    out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace hypchroma
