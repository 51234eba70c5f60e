#include "vnfp/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "vnfp/evaluator.hpp"

namespace vnfp {

PathTable::PathTable(const HostGraph& hg) {
  for (const auto& [id, _] : hg.hosts) host_ids_.push_back(id);
  const int n = host_count();
  delay_.assign(n, std::vector<double>(n, kInf));
  bandwidth_.assign(n, std::vector<double>(n, 0.0));
  hops_.assign(n, std::vector<int>(n, 0));
  std::vector<std::vector<int>> via(n, std::vector<int>(n, -1));

  for (int i = 0; i < n; ++i) {
    delay_[i][i] = 0.0;
    bandwidth_[i][i] = kInf;
  }
  for (const auto& [pair, d] : hg.link_delay) {
    if (pair.first == pair.second) continue;
    int i = host_index(pair.first);
    int j = host_index(pair.second);
    delay_[i][j] = d;
    bandwidth_[i][j] = hg.capacity_between(pair.first, pair.second);
    hops_[i][j] = 1;
  }

  // Floyd-Warshall on (delay, hops, -bandwidth) lexicographic keys.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (i == k || delay_[i][k] == kInf) continue;
      for (int j = 0; j < n; ++j) {
        if (j == k || j == i || delay_[k][j] == kInf) continue;
        double nd = delay_[i][k] + delay_[k][j];
        int nh = hops_[i][k] + hops_[k][j];
        double nb = std::min(bandwidth_[i][k], bandwidth_[k][j]);
        bool better = nd < delay_[i][j] ||
                      (nd == delay_[i][j] &&
                       (nh < hops_[i][j] || (nh == hops_[i][j] && nb > bandwidth_[i][j])));
        if (better) {
          delay_[i][j] = nd;
          hops_[i][j] = nh;
          bandwidth_[i][j] = nb;
          via[i][j] = k;
        }
      }
    }
  }

  paths_.assign(n, std::vector<std::vector<std::pair<int, int>>>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || delay_[i][j] == kInf) continue;
      // expand via-splits down to direct edges
      std::vector<std::pair<int, int>> stack{{i, j}};
      auto& out = paths_[i][j];
      while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        int k = via[a][b];
        if (k < 0) {
          out.push_back({a, b});
        } else {
          stack.push_back({k, b});  // left segment expands first
          stack.push_back({a, k});
        }
      }
    }
  }
}

int PathTable::host_index(const std::string& id) const {
  auto it = std::lower_bound(host_ids_.begin(), host_ids_.end(), id);
  if (it == host_ids_.end() || *it != id) return -1;
  return static_cast<int>(it - host_ids_.begin());
}

double PathTable::delay_between(const std::string& from, const std::string& to) const {
  return delay_[host_index(from)][host_index(to)];
}

double PathTable::bandwidth_between(const std::string& from, const std::string& to) const {
  return bandwidth_[host_index(from)][host_index(to)];
}

int PathTable::hops_between(const std::string& from, const std::string& to) const {
  return hops_[host_index(from)][host_index(to)];
}

PathTable build_path_table(const HostGraph& hg) { return PathTable(hg); }

namespace {

enum class SweepMode { Distance, Latency };

struct GreedySweep {
  const ScenarioView& view;
  const PathTable& table;
  SweepMode mode;
  std::vector<int> assignment;
  std::vector<std::vector<double>> residual_cap;   // [host][resource]
  std::vector<std::vector<double>> residual_link;  // [h1][h2]

  GreedySweep(const ScenarioView& v, const PathTable& t, SweepMode m)
      : view(v), table(t), mode(m), assignment(v.vnf_count(), -1), residual_cap(v.capacity),
        residual_link(v.link_cap) {}

  using Tentative = std::vector<std::pair<int, int>>;  // (vnf, host)

  bool capacity_ok(const Tentative& tent) const {
    std::map<int, std::vector<double>> extra;  // host -> added demand
    for (const auto& [vnf, host] : tent) {
      if (view.cost[host][vnf] == kInf) return false;  // forbidden pairing
      auto& add = extra.try_emplace(host, view.resource_ids.size(), 0.0).first->second;
      for (std::size_t r = 0; r < view.resource_ids.size(); ++r) add[r] += view.demand[vnf][r];
    }
    for (const auto& [host, add] : extra)
      for (std::size_t r = 0; r < view.resource_ids.size(); ++r)
        if (add[r] > residual_cap[host][r]) return false;
    return true;
  }

  int tentative_host(const Tentative& tent, int vnf) const {
    for (const auto& [v, h] : tent)
      if (v == vnf) return h;
    return assignment[vnf];
  }

  // Links charged when a flow binds between two hosts: every virtual link
  // on the min-delay path plus the direct link the flow actually occupies.
  void charge_links(std::map<std::pair<int, int>, double>& need, int h1, int h2,
                    double rate) const {
    if (h1 == h2) return;
    need[{h1, h2}] += rate;
    for (const auto& link : table.path_links(h1, h2)) {
      if (link.first == h1 && link.second == h2) continue;  // already the direct link
      need[link] += rate;
    }
  }

  // Flows that become fully decided once `tent` is applied.
  std::map<std::pair<int, int>, double> binding_flows(const Tentative& tent) const {
    std::map<std::pair<int, int>, double> need;
    for (const auto& flow : view.flows) {
      bool from_tent = false, to_tent = false;
      for (const auto& [v, _] : tent) {
        from_tent |= v == flow.from;
        to_tent |= v == flow.to;
      }
      if (!from_tent && !to_tent) continue;
      int h1 = tentative_host(tent, flow.from);
      int h2 = tentative_host(tent, flow.to);
      if (h1 < 0 || h2 < 0) continue;  // other endpoint still undecided
      charge_links(need, h1, h2, flow.rate);
    }
    return need;
  }

  bool bandwidth_ok(const Tentative& tent) const {
    for (const auto& [link, rate] : binding_flows(tent))
      if (rate > residual_link[link.first][link.second]) return false;
    return true;
  }

  // Applies `tent`, evaluates the per-service partial delays, restores.
  // Returns the total across services, or inf if any budget is violated.
  double guarded_delay(const Tentative& tent) {
    for (const auto& [vnf, host] : tent) assignment[vnf] = host;
    double total = 0.0;
    for (const auto& svc : view.services) {
      double d = service_delay_ms(view, assignment, svc);
      if (d > svc.max_delay_ms) {
        total = kInf;
        break;
      }
      total += d;
    }
    for (const auto& [vnf, _] : tent) assignment[vnf] = -1;
    return total;
  }

  void commit(const Tentative& tent) {
    for (const auto& [link, rate] : binding_flows(tent))
      residual_link[link.first][link.second] -= rate;
    for (const auto& [vnf, host] : tent) {
      for (std::size_t r = 0; r < view.resource_ids.size(); ++r)
        residual_cap[host][r] -= view.demand[vnf][r];
      assignment[vnf] = host;
    }
  }

  struct Candidate {
    Tentative tent;
    double primary = kInf;
    int hops = 0;
    bool valid = false;
  };

  // Smaller key wins; pair order in `tent` breaks remaining ties because
  // candidates are generated in ascending host order.
  bool improves(const Candidate& cand, const Candidate& best) const {
    if (!best.valid) return true;
    if (cand.primary != best.primary) return cand.primary < best.primary;
    if (mode == SweepMode::Distance && cand.hops != best.hops) return cand.hops < best.hops;
    return false;
  }

  Candidate evaluate(const Tentative& tent, int from_host, int to_host) {
    Candidate cand;
    cand.tent = tent;
    if (!capacity_ok(tent) || !bandwidth_ok(tent)) return cand;
    double delay_total = guarded_delay(tent);
    if (delay_total == kInf) return cand;
    if (mode == SweepMode::Distance) {
      cand.primary = table.delay(from_host, to_host);
      cand.hops = table.hops(from_host, to_host);
      if (cand.primary == kInf) return cand;
    } else {
      cand.primary = delay_total;
    }
    cand.valid = true;
    return cand;
  }

  PlacementResult run() {
    // heaviest traffic first, endpoint ids break ties
    std::vector<ScenarioView::Flow> edges = view.flows;
    std::stable_sort(edges.begin(), edges.end(),
                     [](const ScenarioView::Flow& a, const ScenarioView::Flow& b) {
                       return a.rate > b.rate;
                     });

    for (const auto& edge : edges) {
      const bool from_placed = assignment[edge.from] >= 0;
      const bool to_placed = assignment[edge.to] >= 0;
      if (from_placed && to_placed) continue;  // bound when the endpoints were placed

      Candidate best;
      if (!from_placed && !to_placed) {
        for (int ha = 0; ha < view.host_count(); ++ha) {
          for (int hb = 0; hb < view.host_count(); ++hb) {
            auto cand = evaluate({{edge.from, ha}, {edge.to, hb}}, ha, hb);
            if (cand.valid && improves(cand, best)) best = cand;
          }
        }
      } else {
        int unplaced = from_placed ? edge.to : edge.from;
        for (int h = 0; h < view.host_count(); ++h) {
          int ha = from_placed ? assignment[edge.from] : h;
          int hb = from_placed ? h : assignment[edge.to];
          auto cand = evaluate({{unplaced, h}}, ha, hb);
          if (cand.valid && improves(cand, best)) best = cand;
        }
      }
      if (!best.valid) {
        PlacementResult result;
        result.error = "NoFeasibleAssignment";
        return result;
      }
      commit(best.tent);
    }

    // isolated VNFs last, on the least-utilized host that fits
    for (int vnf = 0; vnf < view.vnf_count(); ++vnf) {
      if (assignment[vnf] >= 0) continue;
      int best_host = -1;
      double best_util = kInf;
      for (int h = 0; h < view.host_count(); ++h) {
        Tentative tent{{vnf, h}};
        if (!capacity_ok(tent)) continue;
        if (guarded_delay(tent) == kInf) continue;
        double util = 0.0;
        for (std::size_t r = 0; r < view.resource_ids.size(); ++r) {
          double cap = view.capacity[h][r];
          if (cap <= 0) continue;
          double load = cap - residual_cap[h][r] + view.demand[vnf][r];
          util = std::max(util, load / cap);
        }
        if (best_host < 0 || util < best_util) {
          best_host = h;
          best_util = util;
        }
      }
      if (best_host < 0) {
        PlacementResult result;
        result.error = "NoFeasibleAssignment";
        return result;
      }
      commit({{vnf, best_host}});
    }

    return finalize_assignment(view, assignment);
  }
};

PlacementResult place_greedy(const Scenario& sc, SweepMode mode) {
  auto view = ScenarioView::build(sc);
  PathTable table(sc.host_graph);
  GreedySweep sweep(view, table, mode);
  return sweep.run();
}

}  // namespace

PlacementResult place_min_distance(const Scenario& sc) {
  return place_greedy(sc, SweepMode::Distance);
}

PlacementResult place_min_latency(const Scenario& sc) {
  return place_greedy(sc, SweepMode::Latency);
}

}  // namespace vnfp
