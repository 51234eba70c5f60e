#include "vnfp/cluster.hpp"

#include <algorithm>
#include <cmath>

#include "vnfp/evaluator.hpp"

namespace vnfp {

namespace {

// Agglomerative merge engine over a symmetric pairwise weight matrix.
// Similarity mode joins the heaviest pair and propagates max-linkage;
// distance mode joins the lightest pair and propagates min-linkage.
// Ties go to the lexicographically smallest representative pair.
struct Agglomerator {
  std::vector<std::string> node_ids;              // sorted
  std::vector<std::vector<double>> weight;        // [i][j]
  bool similarity = true;

  Clustering run(int k) const {
    const int n = static_cast<int>(node_ids.size());
    if (k < 1) throw std::invalid_argument("cluster count must be >= 1");
    if (k > n) throw KTooLarge("cluster count " + std::to_string(k) + " exceeds node count " +
                               std::to_string(n));

    struct Slot {
      bool alive = true;
      std::vector<int> members;
    };
    std::vector<Slot> slots(n);
    for (int i = 0; i < n; ++i) slots[i].members = {i};
    std::vector<std::vector<double>> w = weight;

    Clustering out;
    for (int merges = 0; merges < n - k; ++merges) {
      int best_a = -1, best_b = -1;
      double best_w = similarity ? -kInf : kInf;
      for (int i = 0; i < n; ++i) {
        if (!slots[i].alive) continue;
        for (int j = i + 1; j < n; ++j) {
          if (!slots[j].alive) continue;
          double cand = w[i][j];
          bool strictly_better = similarity ? cand > best_w : cand < best_w;
          if (best_a < 0 || strictly_better) {
            best_a = i;
            best_b = j;
            best_w = cand;
          }
        }
      }
      out.merge_trace.push_back({node_ids[best_a], node_ids[best_b], best_w});
      // fold b into a; slot index equals the smallest member index
      auto& a = slots[best_a];
      auto& b = slots[best_b];
      a.members.insert(a.members.end(), b.members.begin(), b.members.end());
      b.alive = false;
      for (int i = 0; i < n; ++i) {
        if (!slots[i].alive || i == best_a) continue;
        w[best_a][i] = w[i][best_a] =
            similarity ? std::max(w[best_a][i], w[best_b][i])
                       : std::min(w[best_a][i], w[best_b][i]);
      }
    }

    out.k = k;
    int cluster = 0;
    for (int i = 0; i < n; ++i) {
      if (!slots[i].alive) continue;
      for (int member : slots[i].members) out.cluster_of[node_ids[member]] = cluster;
      ++cluster;
    }
    return out;
  }
};

}  // namespace

std::vector<std::vector<std::string>> Clustering::members() const {
  std::vector<std::vector<std::string>> out(k);
  for (const auto& [id, cluster] : cluster_of) out[cluster].push_back(id);
  return out;  // map iteration keeps each cluster's members sorted
}

Clustering cluster_vnffg(const Vnffg& g, int k) {
  Agglomerator agg;
  agg.similarity = true;
  for (const auto& [id, _] : g.vnfs) agg.node_ids.push_back(id);
  const int n = static_cast<int>(agg.node_ids.size());
  agg.weight.assign(n, std::vector<double>(n, 0.0));
  auto index = [&](const std::string& id) {
    return static_cast<int>(std::lower_bound(agg.node_ids.begin(), agg.node_ids.end(), id) -
                            agg.node_ids.begin());
  };
  for (const auto& [pair, rate] : g.traffic) {
    if (pair.first == pair.second) continue;
    int i = index(pair.first);
    int j = index(pair.second);
    agg.weight[i][j] += rate;  // both directions sum into one undirected edge
    agg.weight[j][i] += rate;
  }
  return agg.run(k);
}

Clustering cluster_hosts(const HostGraph& hg, int k, const ClusterParams& params) {
  Agglomerator agg;
  agg.similarity = false;
  for (const auto& [id, _] : hg.hosts) agg.node_ids.push_back(id);
  const int n = static_cast<int>(agg.node_ids.size());
  agg.weight.assign(n, std::vector<double>(n, kInf));
  for (int i = 0; i < n; ++i) agg.weight[i][i] = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto& hi = hg.hosts.at(agg.node_ids[i]);
    for (int j = i + 1; j < n; ++j) {
      const auto& hj = hg.hosts.at(agg.node_ids[j]);
      double delay = std::min(hg.delay_between(hi.id, hj.id), hg.delay_between(hj.id, hi.id));
      if (delay < kInf && hi.domain != hj.domain) delay *= params.interdomain_weight;
      agg.weight[i][j] = agg.weight[j][i] = delay;
    }
  }
  return agg.run(k);
}

namespace {

// Per-cluster resource vector in a fixed resource order; used to rank
// clusters for matching.
std::vector<double> cluster_vector(const std::vector<std::string>& members,
                                   const std::vector<std::string>& resource_order,
                                   const std::map<std::string, std::map<std::string, double>>&
                                       per_node) {
  std::vector<double> totals(resource_order.size(), 0.0);
  for (const auto& id : members) {
    const auto& amounts = per_node.at(id);
    for (std::size_t r = 0; r < resource_order.size(); ++r) {
      auto it = amounts.find(resource_order[r]);
      if (it != amounts.end()) totals[r] += it->second;
    }
  }
  return totals;
}

struct RankedCluster {
  int cluster = 0;
  std::vector<double> totals;
  std::string smallest_member;
};

void sort_ranked(std::vector<RankedCluster>& ranked) {
  std::sort(ranked.begin(), ranked.end(), [](const RankedCluster& a, const RankedCluster& b) {
    if (a.totals != b.totals) return a.totals > b.totals;  // heaviest first
    return a.smallest_member < b.smallest_member;
  });
}

}  // namespace

std::map<int, int> match_clusters(const Clustering& vnf_clusters,
                                  const Clustering& host_clusters, const Scenario& sc) {
  if (vnf_clusters.k != host_clusters.k)
    throw std::invalid_argument("cluster counts differ: " + std::to_string(vnf_clusters.k) +
                                " vs " + std::to_string(host_clusters.k));

  // Dominant resource first: order resource types by total VNF demand.
  std::map<std::string, double> demand_totals;
  for (const auto& rt : sc.resource_types) demand_totals[rt] = 0.0;
  for (const auto& [_, vnf] : sc.vnffg.vnfs)
    for (const auto& [rt, amount] : vnf.demand) demand_totals[rt] += amount;
  std::vector<std::string> resource_order = sc.resource_types;
  std::sort(resource_order.begin(), resource_order.end(),
            [&](const std::string& a, const std::string& b) {
              if (demand_totals[a] != demand_totals[b]) return demand_totals[a] > demand_totals[b];
              return a < b;
            });

  std::map<std::string, std::map<std::string, double>> vnf_demand;
  for (const auto& [id, vnf] : sc.vnffg.vnfs) vnf_demand[id] = vnf.demand;
  std::map<std::string, std::map<std::string, double>> host_capacity;
  for (const auto& [id, host] : sc.host_graph.hosts) host_capacity[id] = host.capacity;

  std::vector<RankedCluster> vnf_ranked, host_ranked;
  auto vnf_members = vnf_clusters.members();
  auto host_members = host_clusters.members();
  for (int c = 0; c < vnf_clusters.k; ++c)
    vnf_ranked.push_back({c, cluster_vector(vnf_members[c], resource_order, vnf_demand),
                          vnf_members[c].front()});
  for (int c = 0; c < host_clusters.k; ++c)
    host_ranked.push_back({c, cluster_vector(host_members[c], resource_order, host_capacity),
                           host_members[c].front()});
  sort_ranked(vnf_ranked);
  sort_ranked(host_ranked);

  std::map<int, int> matching;
  for (int i = 0; i < vnf_clusters.k; ++i)
    matching[vnf_ranked[i].cluster] = host_ranked[i].cluster;
  return matching;
}

namespace {

struct AssignState {
  const ScenarioView& view;
  const ClusterParams& params;
  std::vector<std::vector<double>> residual;  // [host][resource]
  std::vector<double> host_util;              // max ratio per host
  std::vector<int> assignment;

  AssignState(const ScenarioView& v, const ClusterParams& p)
      : view(v), params(p), residual(v.capacity), host_util(v.host_count(), 0.0),
        assignment(v.vnf_count(), -1) {}

  bool is_foreign(int host) const {
    return !params.local_domain.empty() && view.host_domain[host] != params.local_domain;
  }

  double effective_cost(int host, int vnf) const {
    double c = view.cost[host][vnf];
    if (is_foreign(host)) c *= params.foreign_cost_factor;
    return c;
  }

  bool fits(int host, int vnf) const {
    if (view.cost[host][vnf] == kInf) return false;  // forbidden pairing
    for (std::size_t r = 0; r < view.resource_ids.size(); ++r)
      if (view.demand[vnf][r] > residual[host][r]) return false;
    return true;
  }

  // max_utilization of the partial placement if vnf were placed at host
  double resulting_utilization(int host, int vnf) const {
    double candidate_util = 0.0;
    for (std::size_t r = 0; r < view.resource_ids.size(); ++r) {
      double cap = view.capacity[host][r];
      if (cap <= 0) continue;
      double load = cap - residual[host][r] + view.demand[vnf][r];
      candidate_util = std::max(candidate_util, load / cap);
    }
    double global = candidate_util;
    for (int h = 0; h < view.host_count(); ++h)
      if (h != host) global = std::max(global, host_util[h]);
    return global;
  }

  // Cheapest fitting host among candidates, load-balance then id tie-break.
  int pick(const std::vector<int>& candidates, int vnf) const {
    int best = -1;
    double best_cost = kInf, best_util = kInf;
    for (int host : candidates) {
      if (!fits(host, vnf)) continue;
      double cost = effective_cost(host, vnf);
      if (best >= 0 && cost > best_cost) continue;
      double util = resulting_utilization(host, vnf);
      if (best < 0 || cost < best_cost || (cost == best_cost && util < best_util)) {
        best = host;
        best_cost = cost;
        best_util = util;
      }
    }
    return best;
  }

  void commit(int host, int vnf) {
    for (std::size_t r = 0; r < view.resource_ids.size(); ++r)
      residual[host][r] -= view.demand[vnf][r];
    double util = 0.0;
    for (std::size_t r = 0; r < view.resource_ids.size(); ++r) {
      double cap = view.capacity[host][r];
      if (cap > 0) util = std::max(util, (cap - residual[host][r]) / cap);
    }
    host_util[host] = util;
    assignment[vnf] = host;
  }
};

}  // namespace

PlacementResult assign(const Clustering& vnf_clusters, const Clustering& host_clusters,
                       const std::map<int, int>& matching, const Scenario& sc,
                       const ClusterParams& params) {
  auto view = ScenarioView::build(sc);
  AssignState state(view, params);

  std::vector<int> all_hosts(view.host_count());
  for (int h = 0; h < view.host_count(); ++h) all_hosts[h] = h;
  std::vector<std::vector<int>> cluster_hosts_idx(host_clusters.k);
  for (const auto& [id, cluster] : host_clusters.cluster_of) {
    int h = view.host_index(id);
    if (h >= 0) cluster_hosts_idx[cluster].push_back(h);
  }
  for (auto& hosts : cluster_hosts_idx) std::sort(hosts.begin(), hosts.end());

  // largest processing delay first, ids break ties
  std::vector<int> order(view.vnf_count());
  for (int v = 0; v < view.vnf_count(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (view.proc_delay[a] != view.proc_delay[b]) return view.proc_delay[a] > view.proc_delay[b];
    return a < b;
  });

  for (int vnf : order) {
    const auto& vid = view.vnf_ids[vnf];
    int vc = vnf_clusters.cluster_of.at(vid);
    const auto& in_cluster = cluster_hosts_idx[matching.at(vc)];

    int chosen = state.pick(in_cluster, vnf);
    if (chosen >= 0 && state.is_foreign(chosen)) {
      // Foreign resources only when necessary: a cheaper local host
      // anywhere overrides the in-cluster foreign pick.
      int global = state.pick(all_hosts, vnf);
      if (global >= 0 && state.effective_cost(global, vnf) < state.effective_cost(chosen, vnf))
        chosen = global;
    }
    if (chosen < 0) chosen = state.pick(all_hosts, vnf);  // out-of-cluster fallback
    if (chosen < 0) {
      PlacementResult result;
      result.error = "NoHostFits";
      result.violations.push_back({Violation::Kind::HostCapacity, vid, "", 0.0, 0.0});
      return result;
    }
    state.commit(chosen, vnf);
  }

  return finalize_assignment(view, state.assignment);
}

PlacementResult place_clustered(const Scenario& sc, const ClusterParams& params) {
  if (params.interdomain_weight < 1.0 || params.foreign_cost_factor < 1.0)
    throw std::invalid_argument("cluster multipliers must be >= 1");
  const int nv = static_cast<int>(sc.vnffg.vnfs.size());
  const int nh = static_cast<int>(sc.host_graph.hosts.size());
  if (nv == 0) {
    auto view = ScenarioView::build(sc);
    return finalize_assignment(view, {});
  }
  if (params.k < 1 || params.k > std::min(nv, nh))
    throw KTooLarge("cluster count " + std::to_string(params.k) + " outside [1, min(" +
                    std::to_string(nv) + ", " + std::to_string(nh) + ")]");

  auto vnf_clusters = cluster_vnffg(sc.vnffg, params.k);
  auto host_clusters = cluster_hosts(sc.host_graph, params.k, params);
  auto matching = match_clusters(vnf_clusters, host_clusters, sc);
  return assign(vnf_clusters, host_clusters, matching, sc, params);
}

}  // namespace vnfp
