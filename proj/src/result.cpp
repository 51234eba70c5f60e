#include "vnfp/result.hpp"

namespace vnfp {

PlacementMetrics compute_metrics(const ScenarioView& view, const std::vector<int>& assignment) {
  PlacementMetrics m;
  for (const auto& svc : view.services) {
    double delay = service_delay_ms(view, assignment, svc);
    m.service_delay_ms[svc.id] = delay;
    m.total_delay_ms += delay;
    m.total_cost += service_cost(view, assignment, svc);
  }
  m.max_utilization = max_utilization(view, assignment);
  return m;
}

PlacementResult finalize_assignment(const ScenarioView& view,
                                    const std::vector<int>& assignment) {
  PlacementResult result;
  result.violations = feasibility_violations(view, assignment);
  if (!result.violations.empty()) {
    result.error = "InfeasiblePlacement";
    return result;
  }
  result.placement = view.to_placement(assignment);
  result.metrics = compute_metrics(view, assignment);
  return result;
}

}  // namespace vnfp
