#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "vnfp/infrastructure.hpp"
#include "vnfp/model.hpp"
#include "vnfp/rng.hpp"

namespace vnfp {

struct InvalidK : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

struct FatTreeParams {
  int k = 4;  // even, >= 2; yields k^3/4 machines
  std::map<std::string, double> machine_capacity = {{"cpu", 8.0}, {"mem", 16.0}};
  double link_bandwidth_mbps = 1000.0;
  double link_latency_ms = 0.5;
  int domains = 1;  // pods are assigned round-robin to domains d0..d{n-1}
};

/// Standard k-ary fat-tree: (k/2)^2 core switches, k pods of k switches
/// (k/2 aggregation + k/2 edge), k/2 machines per edge switch. One NFVI-PoP
/// per pod. Deterministic; throws InvalidK for odd or too-small k.
PhysicalInfra gen_fat_tree(const FatTreeParams& params);

struct ServiceGenParams {
  int count = 3;
  int vnf_min = 5;
  int vnf_max = 10;
  double branch_probability = 0.2;
  std::vector<std::string> resource_types = {"cpu", "mem"};
  // sized against the fat-tree capacities so that packing pressure is real:
  // the cheapest hosts fill up and pure cost-greedy stops being optimal
  std::map<std::string, Range> demand = {{"cpu", {2.0, 5.0}}, {"mem", {2.0, 10.0}}};
  Range proc_delay_ms{0.5, 2.0};
  Range traffic_mbps{10.0, 100.0};
  double max_delay_ms = 100.0;
  double max_cost = 10000.0;
};

struct GeneratedServices {
  Vnffg vnffg;
  std::map<std::string, ServiceSpec> services;
};

/// `count` chain-with-branches services of random size in [vnf_min,
/// vnf_max]; demands, delays, and traffic from the configured ranges, one
/// visit per VNF, transition probabilities split evenly over branches.
GeneratedServices gen_services(const ServiceGenParams& params, std::uint64_t seed);

/// Uniform per-pair placement fees in `range`.
CostTable draw_costs(const std::vector<std::string>& host_ids,
                     const std::vector<std::string>& vnf_ids, Range range, Rng& rng);

struct ScenarioGenParams {
  FatTreeParams fat_tree;
  ServiceGenParams services;
  int abstraction_level = 1;  // 1 or 2
  Range vnf_cost{1.0, 10.0};
};

/// The full pipeline: fat-tree infra, abstraction, random services, random
/// costs. The result always passes validate_scenario.
Scenario build_fat_tree_scenario(const ScenarioGenParams& params, std::uint64_t seed);

}  // namespace vnfp
