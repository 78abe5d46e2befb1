#pragma once

// The net coloring experiment: build a net in a disk, color its distance
// graph greedily and check the induced coloring of the disk by sampling.

#include <cstdint>
#include <optional>

#include "hypchroma/coloring.hpp"
#include "hypchroma/net.hpp"

namespace hypchroma {

struct NetExperimentParams {
  double d = 1.0;
  double region_radius = 6.0;
  std::optional<double> r0;  // default: formulas::net_radius(d)
  std::uint64_t seed = 1;
  std::int64_t trials = 100000;
  ColorOrder order = ColorOrder::DSatur;
  int threads = 1;
  bool timing = false;
};

struct NetExperiment {
  NetExperimentParams params;
  double r0 = 0;
  Net net;
  DistanceGraph graph;
  Coloring coloring;
  double degree_bound = 0;
  std::int64_t phi_plus_one = 0;  // upper_bound_in_d(d)
  ValidationResult validation;
  std::optional<double> wall_time;  // seconds, only with params.timing
};

/// Throws invalid-input when r0 > 2d/5 or R <= d.
NetExperiment run_net_experiment(const NetExperimentParams& params);

}  // namespace hypchroma
