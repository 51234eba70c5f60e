#include "vnfp/infrastructure.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <tuple>

namespace vnfp {

namespace {

struct PathInfo {
  double delay = kInf;
  double bandwidth = 0.0;
  int hops = 0;
  bool reachable() const { return delay < kInf; }
};

// true when lhs is the preferred route: lower latency, then fewer hops,
// then larger bottleneck.
bool better_route(double delay_a, int hops_a, double bw_a, double delay_b, int hops_b,
                  double bw_b) {
  if (delay_a != delay_b) return delay_a < delay_b;
  if (hops_a != hops_b) return hops_a < hops_b;
  return bw_a > bw_b;
}

struct PhysGraph {
  std::vector<std::string> node_ids;               // machines first, then switches
  std::map<std::string, int> index;
  int machine_count = 0;
  std::vector<std::vector<std::tuple<int, double, double>>> adj;  // (to, latency, bw)

  static PhysGraph build(const PhysicalInfra& infra) {
    PhysGraph g;
    for (const auto& m : infra.machines) {
      g.index.emplace(m.id, static_cast<int>(g.node_ids.size()));
      g.node_ids.push_back(m.id);
    }
    g.machine_count = static_cast<int>(g.node_ids.size());
    for (const auto& s : infra.switches) {
      g.index.emplace(s, static_cast<int>(g.node_ids.size()));
      g.node_ids.push_back(s);
    }
    g.adj.resize(g.node_ids.size());
    for (const auto& l : infra.phys_links) {
      int a = g.index.at(l.a);
      int b = g.index.at(l.b);
      g.adj[a].emplace_back(b, l.latency_ms, l.bandwidth_mbps);
      g.adj[b].emplace_back(a, l.latency_ms, l.bandwidth_mbps);
    }
    for (auto& edges : g.adj) std::sort(edges.begin(), edges.end());
    return g;
  }

  // Minimum-latency routes from one machine to every other machine.
  // Intermediate nodes must be switches; other machines are terminals.
  std::vector<PathInfo> routes_from(int source) const {
    const int n = static_cast<int>(node_ids.size());
    std::vector<PathInfo> best(n);
    best[source] = {0.0, kInf, 0};
    using Entry = std::tuple<double, int, int>;  // (delay, hops, node)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    queue.emplace(0.0, 0, source);
    std::vector<bool> settled(n, false);
    while (!queue.empty()) {
      auto [delay, hops, u] = queue.top();
      queue.pop();
      if (settled[u]) continue;
      settled[u] = true;
      const bool terminal = u < machine_count && u != source;
      if (terminal) continue;
      for (const auto& [v, lat, bw] : adj[u]) {
        if (settled[v]) continue;
        double nd = best[u].delay + lat;
        int nh = best[u].hops + 1;
        double nb = std::min(best[u].bandwidth, bw);
        if (better_route(nd, nh, nb, best[v].delay, best[v].hops, best[v].bandwidth)) {
          best[v] = {nd, nb, nh};
          queue.emplace(nd, nh, v);
        }
      }
    }
    return best;
  }
};

}  // namespace

void validate_infra(const PhysicalInfra& infra) {
  std::set<std::string> ids;
  std::set<std::string> pop_ids;
  for (const auto& p : infra.pops) {
    if (!pop_ids.insert(p.id).second)
      throw std::invalid_argument("duplicate pop id '" + p.id + "'");
  }
  for (const auto& m : infra.machines) {
    if (!ids.insert(m.id).second)
      throw std::invalid_argument("duplicate machine id '" + m.id + "'");
    if (!pop_ids.count(m.pop))
      throw std::invalid_argument("machine '" + m.id + "' references unknown pop '" + m.pop + "'");
    for (const auto& [rt, cap] : m.capacity) {
      if (cap < 0 || std::isnan(cap))
        throw std::invalid_argument("machine '" + m.id + "' has negative capacity for '" + rt + "'");
    }
  }
  for (const auto& s : infra.switches) {
    if (!ids.insert(s).second) throw std::invalid_argument("duplicate node id '" + s + "'");
  }
  for (const auto& l : infra.phys_links) {
    if (!ids.count(l.a) || !ids.count(l.b))
      throw std::invalid_argument("phys link (" + l.a + ", " + l.b + ") has unknown endpoint");
    if (!(l.bandwidth_mbps > 0))
      throw std::invalid_argument("phys link (" + l.a + ", " + l.b + ") bandwidth must be > 0");
    if (l.latency_ms < 0 || std::isnan(l.latency_ms))
      throw std::invalid_argument("phys link (" + l.a + ", " + l.b + ") latency must be >= 0");
  }
}

HostGraph abstract_level1(const PhysicalInfra& infra, const CostTable& costs) {
  validate_infra(infra);
  HostGraph hg;
  for (const auto& m : infra.machines) {
    std::string domain;
    for (const auto& p : infra.pops)
      if (p.id == m.pop) domain = p.domain;
    hg.hosts.emplace(m.id, Host{m.id, m.capacity, domain, domain});
  }

  const auto graph = PhysGraph::build(infra);
  bool any_connected = false;
  for (int a = 0; a < graph.machine_count; ++a) {
    auto routes = graph.routes_from(a);
    for (int b = 0; b < graph.machine_count; ++b) {
      if (a == b || !routes[b].reachable()) continue;
      any_connected = true;
      hg.link_delay[{graph.node_ids[a], graph.node_ids[b]}] = routes[b].delay;
      hg.link_capacity[{graph.node_ids[a], graph.node_ids[b]}] = routes[b].bandwidth;
    }
  }
  if (graph.machine_count > 1 && !any_connected)
    throw DisconnectedInfra("no machine pair is connected");

  hg.cost = costs;
  return hg;
}

HostGraph abstract_level2(const PhysicalInfra& infra, const CostTable& costs) {
  validate_infra(infra);
  HostGraph hg;
  std::map<std::string, std::vector<int>> pop_machines;  // pop -> machine graph indices
  const auto graph = PhysGraph::build(infra);
  for (const auto& p : infra.pops) {
    Host host{p.id, {}, p.domain, p.domain};
    hg.hosts.emplace(p.id, std::move(host));
    pop_machines[p.id];
  }
  for (int i = 0; i < graph.machine_count; ++i) {
    const auto& m = infra.machines[i];
    auto& host = hg.hosts.at(m.pop);
    for (const auto& [rt, cap] : m.capacity) host.capacity[rt] += cap;
    pop_machines[m.pop].push_back(graph.index.at(m.id));
  }

  // Level-1 routes between machines, folded to the best pair per PoP pair.
  std::vector<std::vector<PathInfo>> routes(graph.machine_count);
  for (int a = 0; a < graph.machine_count; ++a) routes[a] = graph.routes_from(a);

  bool any_connected = false;
  for (const auto& [pa, machines_a] : pop_machines) {
    for (const auto& [pb, machines_b] : pop_machines) {
      if (pa == pb) continue;
      PathInfo best;
      for (int a : machines_a) {
        for (int b : machines_b) {
          const auto& r = routes[a][b];
          if (r.reachable() &&
              better_route(r.delay, r.hops, r.bandwidth, best.delay, best.hops, best.bandwidth))
            best = r;
        }
      }
      if (best.reachable()) {
        any_connected = true;
        hg.link_delay[{pa, pb}] = best.delay;
        hg.link_capacity[{pa, pb}] = best.bandwidth;
      }
    }
  }
  if (pop_machines.size() > 1 && !any_connected)
    throw DisconnectedInfra("no pop pair is connected");

  hg.cost = costs;
  return hg;
}

Level3Summary abstract_level3(const PhysicalInfra& infra) {
  validate_infra(infra);
  Level3Summary summary;
  for (const auto& m : infra.machines)
    for (const auto& [rt, cap] : m.capacity) summary.total_capacity[rt] += cap;

  HostGraph level2;
  try {
    level2 = abstract_level2(infra, {});
  } catch (const DisconnectedInfra&) {
    return summary;  // no inter-PoP links to summarize
  }
  if (level2.link_delay.empty()) return summary;

  summary.link_count = level2.link_delay.size();
  double dsum = 0.0, bsum = 0.0;
  summary.delay_min_ms = kInf;
  summary.bandwidth_min_mbps = kInf;
  for (const auto& [pair, delay] : level2.link_delay) {
    double bw = level2.link_capacity.at(pair);
    summary.delay_min_ms = std::min(summary.delay_min_ms, delay);
    summary.delay_max_ms = std::max(summary.delay_max_ms, delay);
    summary.bandwidth_min_mbps = std::min(summary.bandwidth_min_mbps, bw);
    summary.bandwidth_max_mbps = std::max(summary.bandwidth_max_mbps, bw);
    dsum += delay;
    bsum += bw;
  }
  summary.delay_mean_ms = dsum / static_cast<double>(summary.link_count);
  summary.bandwidth_mean_mbps = bsum / static_cast<double>(summary.link_count);
  return summary;
}

}  // namespace vnfp
