#pragma once

#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace vnfp {

constexpr double kInf = std::numeric_limits<double>::infinity();

using IdPair = std::pair<std::string, std::string>;

/// A virtual network function with per-resource demands and a fixed
/// processing delay incurred by every request traversing it.
struct Vnf {
  std::string id;
  std::map<std::string, double> demand;  // resource type -> units, >= 0
  double proc_delay_ms = 0.0;

  bool operator==(const Vnf&) const = default;
};

/// The service graph: VNFs plus directed traffic rates between them.
/// A pair absent from `traffic` carries no traffic.
struct Vnffg {
  std::map<std::string, Vnf> vnfs;
  std::map<IdPair, double> traffic;  // (from, to) -> Mbit/s

  double flow(const std::string& from, const std::string& to) const {
    auto it = traffic.find({from, to});
    return it == traffic.end() ? 0.0 : it->second;
  }

  bool operator==(const Vnffg&) const = default;
};

/// Per-service routing statistics and budgets: expected visit counts
/// n(s,v), transition probabilities P(v2|v1,s), and the delay/cost caps.
struct ServiceSpec {
  std::string id;
  std::map<std::string, double> visits;       // vnf -> n(s,v), >= 0
  std::map<IdPair, double> transition;        // (v1, v2) -> P in [0,1]
  double max_delay_ms = 0.0;
  double max_cost = 0.0;

  double visit_count(const std::string& vnf) const {
    auto it = visits.find(vnf);
    return it == visits.end() ? 0.0 : it->second;
  }

  bool operator==(const ServiceSpec&) const = default;
};

struct Host {
  std::string id;
  std::map<std::string, double> capacity;  // resource type -> units, > 0
  std::string domain;
  std::string op;

  bool operator==(const Host&) const = default;
};

/// Abstracted infrastructure: hosts joined by directed virtual links.
/// Intra-host pairs are implicitly free (delay 0, unlimited bandwidth);
/// an absent link pair means no connectivity (bandwidth 0).
struct HostGraph {
  std::map<std::string, Host> hosts;
  std::map<IdPair, double> link_capacity;  // (h1, h2) -> Mbit/s
  std::map<IdPair, double> link_delay;     // (h1, h2) -> ms
  std::map<IdPair, double> cost;           // (host, vnf) -> money, +inf forbids

  double capacity_between(const std::string& h1, const std::string& h2) const {
    if (h1 == h2) return kInf;
    auto it = link_capacity.find({h1, h2});
    return it == link_capacity.end() ? 0.0 : it->second;
  }

  double delay_between(const std::string& h1, const std::string& h2) const {
    if (h1 == h2) return 0.0;
    auto it = link_delay.find({h1, h2});
    return it == link_delay.end() ? kInf : it->second;
  }

  double placement_cost(const std::string& host, const std::string& vnf) const {
    auto it = cost.find({host, vnf});
    return it == cost.end() ? kInf : it->second;
  }

  bool operator==(const HostGraph&) const = default;
};

/// A complete VNF -> host assignment.
struct Placement {
  std::map<std::string, std::string> assignment;  // vnf -> host

  bool operator==(const Placement&) const = default;
};

struct Scenario {
  std::vector<std::string> resource_types;
  Vnffg vnffg;
  HostGraph host_graph;
  std::map<std::string, ServiceSpec> services;

  bool operator==(const Scenario&) const = default;
};

enum class ValidationCode {
  DanglingReference,
  NegativeQuantity,
  ProbabilityMassExceeded,
  MissingCostEntry,
  SelfTraffic,
};

struct ValidationError {
  ValidationCode code;
  std::string detail;
};

const char* to_string(ValidationCode code);

/// Checks every model invariant and returns all violations, not just the
/// first. An empty result means the scenario is accepted.
std::vector<ValidationError> validate_scenario(const Scenario& scenario);

/// Returns the scenario unchanged if it validates; otherwise throws
/// std::invalid_argument listing every violation.
Scenario validated(Scenario scenario);

}  // namespace vnfp
