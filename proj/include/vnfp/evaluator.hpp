#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vnfp/model.hpp"

namespace vnfp {

enum class Objective { Cost, Delay, Weighted };

const char* to_string(Objective objective);
std::optional<Objective> objective_from_string(const std::string& name);

struct Violation {
  enum class Kind { HostCapacity, LinkCapacity, ServiceDelay, ServiceCost };
  Kind kind;
  std::string a;  // host / link source / service id
  std::string b;  // resource / link target (empty otherwise)
  double actual = 0.0;
  double limit = 0.0;

  std::string describe() const;
};

std::string violations_to_json(const std::vector<Violation>& violations);

/// Index-compiled scenario for the inner loops. Ids are sorted, so indices
/// are deterministic for a given scenario. `assignment` vectors are indexed
/// by VNF, hold host indices, and use -1 for unplaced VNFs.
struct ScenarioView {
  std::vector<std::string> vnf_ids;
  std::vector<std::string> host_ids;
  std::vector<std::string> resource_ids;

  std::vector<std::vector<double>> demand;    // [vnf][resource]
  std::vector<double> proc_delay;             // [vnf]
  std::vector<std::vector<double>> capacity;  // [host][resource]
  std::vector<std::vector<double>> link_cap;  // [h1][h2], diag inf, absent 0
  std::vector<std::vector<double>> link_del;  // [h1][h2], diag 0, absent inf
  std::vector<std::vector<double>> cost;      // [host][vnf]
  std::vector<std::string> host_domain;       // [host]

  struct Flow {
    int from, to;
    double rate;  // > 0
  };
  std::vector<Flow> flows;

  struct Transition {
    int from, to;
    double p;  // > 0
  };
  struct Service {
    std::string id;
    std::vector<double> visits;  // [vnf]
    std::vector<Transition> transitions;
    double max_delay_ms = 0.0;
    double max_cost = 0.0;
  };
  std::vector<Service> services;

  static ScenarioView build(const Scenario& scenario);

  int vnf_count() const { return static_cast<int>(vnf_ids.size()); }
  int host_count() const { return static_cast<int>(host_ids.size()); }

  int vnf_index(const std::string& id) const;   // -1 if unknown
  int host_index(const std::string& id) const;  // -1 if unknown

  /// Throws std::invalid_argument unless `p` covers every VNF exactly once
  /// with known hosts.
  std::vector<int> to_indices(const Placement& p) const;
  Placement to_placement(const std::vector<int>& assignment) const;
};

// Index-based core. Unplaced VNFs (-1) contribute nothing, so the same
// routines serve both complete placements and in-flight partial ones.
std::vector<Violation> capacity_violations(const ScenarioView& view,
                                           const std::vector<int>& assignment);
std::vector<Violation> link_violations(const ScenarioView& view,
                                       const std::vector<int>& assignment);
double service_delay_ms(const ScenarioView& view, const std::vector<int>& assignment,
                        const ScenarioView::Service& service);
double service_cost(const ScenarioView& view, const std::vector<int>& assignment,
                    const ScenarioView::Service& service);
std::vector<Violation> feasibility_violations(const ScenarioView& view,
                                              const std::vector<int>& assignment);
double max_utilization(const ScenarioView& view, const std::vector<int>& assignment);
double total_cost(const ScenarioView& view, const std::vector<int>& assignment);
double total_delay_ms(const ScenarioView& view, const std::vector<int>& assignment);
double objective_value(const ScenarioView& view, const std::vector<int>& assignment,
                       Objective objective);

// Id-based wrappers matching the model types. All require a complete
// placement except max_utilization, which accepts partial ones.
std::vector<Violation> check_capacity(const Placement& p, const Scenario& sc);
std::vector<Violation> check_link_capacity(const Placement& p, const Scenario& sc);
double service_delay(const Placement& p, const ServiceSpec& s, const Scenario& sc);
double placement_cost(const Placement& p, const ServiceSpec& s, const Scenario& sc);
std::vector<Violation> is_feasible(const Placement& p, const Scenario& sc);
double max_utilization(const Placement& p, const Scenario& sc);

struct SearchSpaceTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BruteForceResult {
  std::optional<Placement> placement;  // empty when no feasible assignment exists
  double objective_value = 0.0;
  std::uint64_t assignments_considered = 0;
};

/// Exhaustive search over all |H|^|V| assignments; returns the feasible
/// minimizer of the objective, ties broken lexicographically by assignment.
/// Throws SearchSpaceTooLarge when |H|^|V| exceeds the bound.
BruteForceResult brute_force_place(const Scenario& sc, Objective objective,
                                   std::uint64_t bound = 1'000'000);
BruteForceResult brute_force_place(const ScenarioView& view, Objective objective,
                                   std::uint64_t bound = 1'000'000);

}  // namespace vnfp
