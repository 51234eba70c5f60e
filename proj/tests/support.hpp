#pragma once

#include <string>
#include <vector>

#include "vnfp/model.hpp"
#include "vnfp/rng.hpp"

namespace vnfp::testing {

// Two hosts, two chained VNFs; small enough to verify every metric by hand
// and by exhaustive search.
inline Scenario t1() {
  Scenario sc;
  sc.resource_types = {"cpu"};

  Vnf a{"a", {{"cpu", 4.0}}, 1.0};
  Vnf b{"b", {{"cpu", 8.0}}, 1.0};
  sc.vnffg.vnfs = {{"a", a}, {"b", b}};
  sc.vnffg.traffic[{"a", "b"}] = 3.0;

  sc.host_graph.hosts = {{"h1", {"h1", {{"cpu", 12.0}}, "d0", "d0"}},
                         {"h2", {"h2", {{"cpu", 10.0}}, "d0", "d0"}}};
  sc.host_graph.link_delay[{"h1", "h2"}] = 2.0;
  sc.host_graph.link_delay[{"h2", "h1"}] = 2.0;
  sc.host_graph.link_capacity[{"h1", "h2"}] = 5.0;
  sc.host_graph.link_capacity[{"h2", "h1"}] = 5.0;
  sc.host_graph.cost[{"h1", "a"}] = 1.0;
  sc.host_graph.cost[{"h1", "b"}] = 1.0;
  sc.host_graph.cost[{"h2", "a"}] = 2.0;
  sc.host_graph.cost[{"h2", "b"}] = 2.0;

  ServiceSpec s1;
  s1.id = "s1";
  s1.visits = {{"a", 1.0}, {"b", 1.0}};
  s1.transition[{"a", "b"}] = 1.0;
  s1.max_delay_ms = 10.0;
  s1.max_cost = 100.0;
  sc.services = {{"s1", s1}};
  return sc;
}

inline Placement place(std::initializer_list<std::pair<std::string, std::string>> pairs) {
  Placement p;
  for (const auto& [vnf, host] : pairs) p.assignment[vnf] = host;
  return p;
}

struct RandomScenarioParams {
  int host_min = 4;
  int host_max = 16;
  int vnf_min = 3;
  int vnf_max = 12;
  int host_cpu_min = 8;
  int host_cpu_max = 16;
  int host_mem_min = 16;
  int host_mem_max = 32;
  double max_delay_ms = 200.0;
  double max_cost = 1e9;     // generous unless a test wants binding budgets
  bool symmetric_delays = true;
};

// Random chain services over a complete host graph with integer-valued
// parameters (keeps double sums exact in the properties).
inline Scenario random_scenario(Rng& rng, const RandomScenarioParams& params = {}) {
  Scenario sc;
  sc.resource_types = {"cpu", "mem"};

  const int nh = rng.uniform_int(params.host_min, params.host_max);
  std::vector<std::string> hosts;
  for (int h = 0; h < nh; ++h) {
    std::string id = "h" + std::string(h < 10 ? "0" : "") + std::to_string(h);
    hosts.push_back(id);
    sc.host_graph.hosts.emplace(
        id,
        Host{id,
             {{"cpu", static_cast<double>(
                          rng.uniform_int(params.host_cpu_min, params.host_cpu_max))},
              {"mem", static_cast<double>(
                          rng.uniform_int(params.host_mem_min, params.host_mem_max))}},
             "d0",
             "d0"});
  }
  for (int i = 0; i < nh; ++i) {
    for (int j = i + 1; j < nh; ++j) {
      double d1 = rng.uniform_int(1, 5);
      double d2 = params.symmetric_delays ? d1 : rng.uniform_int(1, 5);
      double t1 = rng.uniform_int(50, 200);
      double t2 = params.symmetric_delays ? t1 : rng.uniform_int(50, 200);
      sc.host_graph.link_delay[{hosts[i], hosts[j]}] = d1;
      sc.host_graph.link_delay[{hosts[j], hosts[i]}] = d2;
      sc.host_graph.link_capacity[{hosts[i], hosts[j]}] = t1;
      sc.host_graph.link_capacity[{hosts[j], hosts[i]}] = t2;
    }
  }

  const int total_vnfs = rng.uniform_int(params.vnf_min, params.vnf_max);
  const int service_count = total_vnfs >= 6 ? rng.uniform_int(1, 2) : 1;
  int made = 0;
  for (int s = 0; s < service_count; ++s) {
    int size = s + 1 == service_count ? total_vnfs - made
                                      : rng.uniform_int(1, total_vnfs - made - 1);
    ServiceSpec svc;
    svc.id = "svc" + std::to_string(s);
    svc.max_delay_ms = params.max_delay_ms;
    svc.max_cost = params.max_cost;
    std::vector<std::string> chain;
    for (int j = 0; j < size; ++j) {
      Vnf vnf;
      vnf.id = "s" + std::to_string(s) + "v" + std::string(j < 10 ? "0" : "") +
               std::to_string(j);
      vnf.demand = {{"cpu", static_cast<double>(rng.uniform_int(1, 4))},
                    {"mem", static_cast<double>(rng.uniform_int(1, 8))}};
      vnf.proc_delay_ms = rng.uniform_int(1, 3);
      svc.visits[vnf.id] = 1.0;
      chain.push_back(vnf.id);
      sc.vnffg.vnfs.emplace(vnf.id, std::move(vnf));
      ++made;
    }
    for (std::size_t j = 1; j < chain.size(); ++j) {
      sc.vnffg.traffic[{chain[j - 1], chain[j]}] = rng.uniform_int(5, 20);
      svc.transition[{chain[j - 1], chain[j]}] = 1.0;
    }
    sc.services.emplace(svc.id, std::move(svc));
  }

  for (const auto& host : hosts)
    for (const auto& [vid, _] : sc.vnffg.vnfs)
      sc.host_graph.cost[{host, vid}] = rng.uniform_int(1, 10);
  return sc;
}

// Hosts split between a local and a foreign domain; local capacity always
// suffices (one spare local host per VNF), so a local-only solution exists.
inline Scenario multi_domain_scenario(Rng& rng) {
  Scenario sc;
  sc.resource_types = {"cpu"};

  const int vnfs = rng.uniform_int(2, 4);
  const int local_hosts = vnfs + rng.uniform_int(0, 2);
  const int foreign_hosts = rng.uniform_int(1, 3);

  std::vector<std::string> hosts;
  for (int h = 0; h < local_hosts + foreign_hosts; ++h) {
    std::string id = "h" + std::string(h < 10 ? "0" : "") + std::to_string(h);
    std::string domain = h < local_hosts ? "local" : "far";
    hosts.push_back(id);
    sc.host_graph.hosts.emplace(
        id, Host{id, {{"cpu", static_cast<double>(rng.uniform_int(8, 12))}}, domain, domain});
  }
  for (std::size_t i = 0; i < hosts.size(); ++i) {
    for (std::size_t j = 0; j < hosts.size(); ++j) {
      if (i == j) continue;
      sc.host_graph.link_delay[{hosts[i], hosts[j]}] = rng.uniform_int(1, 4);
      sc.host_graph.link_capacity[{hosts[i], hosts[j]}] = 1000.0;
    }
  }

  ServiceSpec svc;
  svc.id = "svc0";
  svc.max_delay_ms = 1000.0;
  svc.max_cost = 1e12;
  std::vector<std::string> chain;
  for (int j = 0; j < vnfs; ++j) {
    Vnf vnf;
    vnf.id = "v" + std::to_string(j);
    vnf.demand = {{"cpu", static_cast<double>(rng.uniform_int(1, 6))}};
    vnf.proc_delay_ms = rng.uniform_int(1, 2);
    svc.visits[vnf.id] = 1.0;
    chain.push_back(vnf.id);
    sc.vnffg.vnfs.emplace(vnf.id, std::move(vnf));
  }
  for (std::size_t j = 1; j < chain.size(); ++j) {
    sc.vnffg.traffic[{chain[j - 1], chain[j]}] = rng.uniform_int(5, 20);
    svc.transition[{chain[j - 1], chain[j]}] = 1.0;
  }
  sc.services.emplace(svc.id, std::move(svc));

  for (const auto& host : hosts)
    for (const auto& [vid, _] : sc.vnffg.vnfs)
      sc.host_graph.cost[{host, vid}] = rng.uniform_int(1, 10);
  return sc;
}

}  // namespace vnfp::testing
