#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vnfp/evaluator.hpp"
#include "vnfp/model.hpp"

namespace vnfp {

struct PlacementMetrics {
  double total_cost = 0.0;
  double total_delay_ms = 0.0;
  std::map<std::string, double> service_delay_ms;  // per service
  double max_utilization = 0.0;
};

/// Outcome of an orchestrator run: either a feasible placement with its
/// metrics, or a diagnosis (constraint violations and/or an error note).
struct PlacementResult {
  std::optional<Placement> placement;
  PlacementMetrics metrics;
  std::vector<Violation> violations;
  std::string error;  // e.g. "NoHostFits", empty when placement is set

  bool feasible() const { return placement.has_value(); }
};

PlacementMetrics compute_metrics(const ScenarioView& view, const std::vector<int>& assignment);

/// Runs the evaluator on a finished assignment and wraps it up: feasible
/// placements get metrics, infeasible ones get the violation list.
PlacementResult finalize_assignment(const ScenarioView& view, const std::vector<int>& assignment);

}  // namespace vnfp
