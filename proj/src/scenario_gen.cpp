#include "vnfp/scenario_gen.hpp"

#include <algorithm>
#include <sstream>

namespace vnfp {

namespace {

std::string padded(int value, int width) {
  std::ostringstream os;
  os << value;
  std::string s = os.str();
  while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
  return s;
}

}  // namespace

PhysicalInfra gen_fat_tree(const FatTreeParams& params) {
  const int k = params.k;
  if (k < 2 || k % 2 != 0) throw InvalidK("fat-tree parameter k must be even and >= 2");
  const int half = k / 2;

  PhysicalInfra infra;
  for (int p = 0; p < k; ++p)
    infra.pops.push_back({"pop" + std::to_string(p),
                          "d" + std::to_string(p % std::max(1, params.domains))});

  // core switches c{group}_{index}
  for (int g = 0; g < half; ++g)
    for (int i = 0; i < half; ++i)
      infra.switches.push_back("c" + std::to_string(g) + "_" + std::to_string(i));

  int machine = 0;
  for (int p = 0; p < k; ++p) {
    const std::string pod = std::to_string(p);
    for (int j = 0; j < half; ++j) infra.switches.push_back("a" + pod + "_" + std::to_string(j));
    for (int i = 0; i < half; ++i) infra.switches.push_back("e" + pod + "_" + std::to_string(i));

    for (int i = 0; i < half; ++i) {
      const std::string edge = "e" + pod + "_" + std::to_string(i);
      for (int m = 0; m < half; ++m) {
        std::string id = "m" + padded(machine++, 3);
        infra.machines.push_back({id, "pop" + pod, params.machine_capacity});
        infra.phys_links.push_back(
            {id, edge, params.link_bandwidth_mbps, params.link_latency_ms});
      }
      for (int j = 0; j < half; ++j)
        infra.phys_links.push_back({edge, "a" + pod + "_" + std::to_string(j),
                                    params.link_bandwidth_mbps, params.link_latency_ms});
    }
    for (int j = 0; j < half; ++j)
      for (int l = 0; l < half; ++l)
        infra.phys_links.push_back({"a" + pod + "_" + std::to_string(j),
                                    "c" + std::to_string(j) + "_" + std::to_string(l),
                                    params.link_bandwidth_mbps, params.link_latency_ms});
  }
  return infra;
}

GeneratedServices gen_services(const ServiceGenParams& params, std::uint64_t seed) {
  if (params.vnf_min < 1 || params.vnf_max < params.vnf_min)
    throw std::invalid_argument("vnf range must satisfy 1 <= min <= max");

  Rng rng(seed);
  GeneratedServices out;
  for (int s = 0; s < params.count; ++s) {
    const std::string sid = "svc" + std::to_string(s);
    const int size = rng.uniform_int(params.vnf_min, params.vnf_max);

    std::vector<std::string> ids;
    for (int j = 0; j < size; ++j) {
      Vnf vnf;
      vnf.id = "s" + std::to_string(s) + "_v" + padded(j, 2);
      for (const auto& rt : params.resource_types) {
        auto range = params.demand.count(rt) ? params.demand.at(rt) : Range{0.0, 0.0};
        vnf.demand[rt] = rng.uniform(range.lo, range.hi);
      }
      vnf.proc_delay_ms = rng.uniform(params.proc_delay_ms.lo, params.proc_delay_ms.hi);
      ids.push_back(vnf.id);
      out.vnffg.vnfs.emplace(vnf.id, std::move(vnf));
    }

    ServiceSpec svc;
    svc.id = sid;
    svc.max_delay_ms = params.max_delay_ms;
    svc.max_cost = params.max_cost;
    for (const auto& id : ids) svc.visits[id] = 1.0;

    // chain with occasional branches back to an earlier VNF
    std::map<std::string, std::vector<std::string>> children;
    for (int j = 1; j < size; ++j) {
      int parent = j - 1;
      if (j >= 2 && rng.u01() < params.branch_probability) parent = rng.uniform_int(0, j - 2);
      double rate = rng.uniform(params.traffic_mbps.lo, params.traffic_mbps.hi);
      out.vnffg.traffic[{ids[parent], ids[j]}] = rate;
      children[ids[parent]].push_back(ids[j]);
    }
    for (const auto& [parent, kids] : children) {
      double p = 1.0 / static_cast<double>(kids.size());
      for (const auto& child : kids) svc.transition[{parent, child}] = p;
    }
    out.services.emplace(sid, std::move(svc));
  }
  return out;
}

CostTable draw_costs(const std::vector<std::string>& host_ids,
                     const std::vector<std::string>& vnf_ids, Range range, Rng& rng) {
  CostTable costs;
  for (const auto& host : host_ids)
    for (const auto& vnf : vnf_ids) costs[{host, vnf}] = rng.uniform(range.lo, range.hi);
  return costs;
}

Scenario build_fat_tree_scenario(const ScenarioGenParams& params, std::uint64_t seed) {
  for (const auto& rt : params.services.resource_types) {
    auto it = params.fat_tree.machine_capacity.find(rt);
    if (it == params.fat_tree.machine_capacity.end() || !(it->second > 0))
      throw std::invalid_argument("machine capacity missing for resource '" + rt + "'");
  }

  auto infra = gen_fat_tree(params.fat_tree);
  auto generated = gen_services(params.services, seed);

  HostGraph hg;
  if (params.abstraction_level == 1)
    hg = abstract_level1(infra, {});
  else if (params.abstraction_level == 2)
    hg = abstract_level2(infra, {});
  else
    throw std::invalid_argument("abstraction level must be 1 or 2");

  std::vector<std::string> host_ids;
  for (const auto& [id, _] : hg.hosts) host_ids.push_back(id);
  std::vector<std::string> vnf_ids;
  for (const auto& [id, _] : generated.vnffg.vnfs) vnf_ids.push_back(id);

  Rng cost_rng(seed ^ 0x9e3779b97f4a7c15ull);
  hg.cost = draw_costs(host_ids, vnf_ids, params.vnf_cost, cost_rng);

  Scenario sc;
  sc.resource_types = params.services.resource_types;
  sc.vnffg = std::move(generated.vnffg);
  sc.host_graph = std::move(hg);
  sc.services = std::move(generated.services);
  return validated(std::move(sc));
}

}  // namespace vnfp
