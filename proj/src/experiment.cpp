#include "vnfp/experiment.hpp"

#include <charconv>
#include <chrono>
#include <cmath>

#include "json.hpp"

#include "vnfp/greedy.hpp"

namespace vnfp {

const char* to_string(Algo algo) {
  switch (algo) {
    case Algo::Cluster: return "cluster";
    case Algo::MinDistance: return "min-distance";
    case Algo::MinLatency: return "min-latency";
    case Algo::Ga: return "ga";
    case Algo::BruteForce: return "brute-force";
  }
  return "unknown";
}

std::optional<Algo> algo_from_string(const std::string& name) {
  if (name == "cluster") return Algo::Cluster;
  if (name == "min-distance") return Algo::MinDistance;
  if (name == "min-latency") return Algo::MinLatency;
  if (name == "ga") return Algo::Ga;
  if (name == "brute-force") return Algo::BruteForce;
  return std::nullopt;
}

namespace {

PlacementResult brute_result(const Scenario& sc, Objective objective, std::uint64_t bound) {
  auto view = ScenarioView::build(sc);
  auto best = brute_force_place(view, objective, bound);
  PlacementResult result;
  if (!best.placement) {
    result.error = "NoFeasibleAssignment";
    return result;
  }
  return finalize_assignment(view, view.to_indices(*best.placement));
}

}  // namespace

RunOutcome run_algorithm(const Scenario& sc, const RunOptions& options) {
  RunOutcome outcome;
  outcome.label = to_string(options.algo);
  auto start = std::chrono::steady_clock::now();
  switch (options.algo) {
    case Algo::Cluster:
      outcome.param = std::to_string(options.cluster.k);
      outcome.result = place_clustered(sc, options.cluster);
      break;
    case Algo::MinDistance:
      outcome.result = place_min_distance(sc);
      break;
    case Algo::MinLatency:
      outcome.result = place_min_latency(sc);
      break;
    case Algo::Ga: {
      outcome.param = to_string(options.ga.objective);
      outcome.result = evolve(sc, options.ga).result;
      break;
    }
    case Algo::BruteForce:
      outcome.param = to_string(options.brute_objective);
      outcome.result = brute_result(sc, options.brute_objective, options.brute_bound);
      break;
  }
  if (options.timing) {
    outcome.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  }
  return outcome;
}

std::vector<RunOutcome> sweep(const Scenario& sc, const SweepOptions& options) {
  std::vector<RunOutcome> rows;
  for (int k = options.k_min; k <= options.k_max; ++k) {
    RunOptions run;
    run.algo = Algo::Cluster;
    run.cluster = options.cluster;
    run.cluster.k = k;
    run.timing = options.timing;
    rows.push_back(run_algorithm(sc, run));
  }
  if (options.include_ga) {
    for (Objective objective : {Objective::Cost, Objective::Delay}) {
      RunOptions run;
      run.algo = Algo::Ga;
      run.ga = options.ga;
      run.ga.objective = objective;
      run.timing = options.timing;
      rows.push_back(run_algorithm(sc, run));
    }
  }
  return rows;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string sweep_to_csv(const std::vector<RunOutcome>& rows) {
  std::string csv = "label,k_or_objective,total_cost,total_delay,runtime_ms,feasible\n";
  for (const auto& row : rows) {
    const bool ok = row.result.feasible();
    csv += row.label;
    csv += ',';
    csv += row.param;
    csv += ',';
    csv += ok ? format_double(row.result.metrics.total_cost) : "nan";
    csv += ',';
    csv += ok ? format_double(row.result.metrics.total_delay_ms) : "nan";
    csv += ',';
    csv += format_double(row.runtime_ms);
    csv += ',';
    csv += ok ? "true" : "false";
    csv += '\n';
  }
  return csv;
}

std::string outcome_to_json(const RunOutcome& outcome) {
  nlohmann::json j;
  j["label"] = outcome.label;
  if (!outcome.param.empty()) j["param"] = outcome.param;
  j["feasible"] = outcome.result.feasible();
  j["runtime_ms"] = outcome.runtime_ms;
  if (outcome.result.feasible()) {
    j["assignment"] = outcome.result.placement->assignment;
    j["total_cost"] = outcome.result.metrics.total_cost;
    j["total_delay_ms"] = outcome.result.metrics.total_delay_ms;
    j["service_delay_ms"] = outcome.result.metrics.service_delay_ms;
    j["max_utilization"] = outcome.result.metrics.max_utilization;
  } else {
    j["error"] = outcome.result.error;
    j["violations"] = nlohmann::json::parse(violations_to_json(outcome.result.violations));
  }
  return j.dump();
}

}  // namespace vnfp
