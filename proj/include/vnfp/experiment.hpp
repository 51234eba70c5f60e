#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vnfp/cluster.hpp"
#include "vnfp/evaluator.hpp"
#include "vnfp/ga.hpp"
#include "vnfp/model.hpp"
#include "vnfp/result.hpp"

namespace vnfp {

enum class Algo { Cluster, MinDistance, MinLatency, Ga, BruteForce };

const char* to_string(Algo algo);
std::optional<Algo> algo_from_string(const std::string& name);

struct RunOptions {
  Algo algo = Algo::Cluster;
  ClusterParams cluster;
  GaConfig ga;
  Objective brute_objective = Objective::Cost;
  std::uint64_t brute_bound = 1'000'000;
  bool timing = true;  // false reports runtime_ms as 0 for reproducible output
};

struct RunOutcome {
  std::string label;  // algorithm label
  std::string param;  // cluster count or objective, empty otherwise
  PlacementResult result;
  double runtime_ms = 0.0;
};

RunOutcome run_algorithm(const Scenario& sc, const RunOptions& options);

struct SweepOptions {
  int k_min = 1;
  int k_max = 7;
  bool include_ga = true;
  ClusterParams cluster;  // k is overridden by the sweep
  GaConfig ga;            // objective is overridden per GA row
  bool timing = true;
};

/// One row per cluster count plus, when enabled, one GA row per objective.
std::vector<RunOutcome> sweep(const Scenario& sc, const SweepOptions& options);

/// Shortest round-trip decimal rendering, shared by all emitters.
std::string format_double(double value);

/// CSV with header label,k_or_objective,total_cost,total_delay,runtime_ms,
/// feasible; every row newline-terminated.
std::string sweep_to_csv(const std::vector<RunOutcome>& rows);

std::string outcome_to_json(const RunOutcome& outcome);

}  // namespace vnfp
