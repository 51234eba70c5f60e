#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "vnfp/model.hpp"

namespace vnfp {

/// Physical view of the infrastructure before abstraction: machines grouped
/// into NFVI-PoPs, switches, and undirected physical links between them.
struct Machine {
  std::string id;
  std::string pop;
  std::map<std::string, double> capacity;

  bool operator==(const Machine&) const = default;
};

struct NfviPop {
  std::string id;
  std::string domain;

  bool operator==(const NfviPop&) const = default;
};

struct PhysLink {
  std::string a;
  std::string b;
  double bandwidth_mbps = 0.0;  // > 0
  double latency_ms = 0.0;      // >= 0

  bool operator==(const PhysLink&) const = default;
};

struct PhysicalInfra {
  std::vector<Machine> machines;
  std::vector<NfviPop> pops;
  std::vector<std::string> switches;
  std::vector<PhysLink> phys_links;

  bool operator==(const PhysicalInfra&) const = default;
};

struct DisconnectedInfra : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Aggregate view advertised at MTP granularity: one capacity vector plus
/// summary statistics of the inter-PoP virtual links. Advertisement only,
/// not usable as a placement input.
struct Level3Summary {
  std::map<std::string, double> total_capacity;
  std::size_t link_count = 0;
  double delay_min_ms = 0.0;
  double delay_max_ms = 0.0;
  double delay_mean_ms = 0.0;
  double bandwidth_min_mbps = 0.0;
  double bandwidth_max_mbps = 0.0;
  double bandwidth_mean_mbps = 0.0;
};

using CostTable = std::map<IdPair, double>;  // (host, vnf) -> money

/// Throws std::invalid_argument on malformed infra (unknown endpoints,
/// non-positive bandwidth, negative latency, duplicate ids).
void validate_infra(const PhysicalInfra& infra);

/// Machine-granularity abstraction: one host per physical machine, virtual
/// links from the minimum-latency switch path between each machine pair
/// (delay = path latency sum, bandwidth = path bottleneck). Pairs with no
/// path get no link; throws DisconnectedInfra only if no pair at all is
/// connected.
HostGraph abstract_level1(const PhysicalInfra& infra, const CostTable& costs);

/// PoP-granularity abstraction: capacities summed per NFVI-PoP, inter-PoP
/// link delay equal to the minimum Level-1 delay over machine pairs of the
/// two PoPs, bandwidth from that same path.
HostGraph abstract_level2(const PhysicalInfra& infra, const CostTable& costs);

Level3Summary abstract_level3(const PhysicalInfra& infra);

}  // namespace vnfp
