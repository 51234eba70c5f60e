#include "vnfp/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace vnfp {

const char* to_string(Objective objective) {
  switch (objective) {
    case Objective::Cost: return "cost";
    case Objective::Delay: return "delay";
    case Objective::Weighted: return "weighted";
  }
  return "unknown";
}

std::optional<Objective> objective_from_string(const std::string& name) {
  if (name == "cost") return Objective::Cost;
  if (name == "delay") return Objective::Delay;
  if (name == "weighted") return Objective::Weighted;
  return std::nullopt;
}

std::string Violation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::HostCapacity:
      os << "host '" << a << "' resource '" << b << "': load " << actual << " > capacity "
         << limit;
      break;
    case Kind::LinkCapacity:
      os << "link (" << a << ", " << b << "): flow " << actual << " > capacity " << limit;
      break;
    case Kind::ServiceDelay:
      os << "service '" << a << "': delay " << actual << " ms > budget " << limit << " ms";
      break;
    case Kind::ServiceCost:
      os << "service '" << a << "': cost " << actual << " > budget " << limit;
      break;
  }
  return os.str();
}

std::string violations_to_json(const std::vector<Violation>& violations) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : violations) {
    nlohmann::json e;
    switch (v.kind) {
      case Violation::Kind::HostCapacity: e["kind"] = "host_capacity"; break;
      case Violation::Kind::LinkCapacity: e["kind"] = "link_capacity"; break;
      case Violation::Kind::ServiceDelay: e["kind"] = "service_delay"; break;
      case Violation::Kind::ServiceCost: e["kind"] = "service_cost"; break;
    }
    e["subject"] = v.a;
    if (!v.b.empty()) e["detail"] = v.b;
    e["actual"] = std::isfinite(v.actual) ? nlohmann::json(v.actual) : nlohmann::json(nullptr);
    e["limit"] = std::isfinite(v.limit) ? nlohmann::json(v.limit) : nlohmann::json(nullptr);
    out.push_back(std::move(e));
  }
  return out.dump(2);
}

ScenarioView ScenarioView::build(const Scenario& sc) {
  ScenarioView view;
  for (const auto& [id, _] : sc.vnffg.vnfs) view.vnf_ids.push_back(id);
  for (const auto& [id, _] : sc.host_graph.hosts) view.host_ids.push_back(id);
  view.resource_ids = sc.resource_types;
  std::sort(view.resource_ids.begin(), view.resource_ids.end());

  const int nv = view.vnf_count();
  const int nh = view.host_count();
  const int nr = static_cast<int>(view.resource_ids.size());

  view.demand.assign(nv, std::vector<double>(nr, 0.0));
  view.proc_delay.assign(nv, 0.0);
  for (int v = 0; v < nv; ++v) {
    const auto& vnf = sc.vnffg.vnfs.at(view.vnf_ids[v]);
    view.proc_delay[v] = vnf.proc_delay_ms;
    for (int r = 0; r < nr; ++r) {
      auto it = vnf.demand.find(view.resource_ids[r]);
      if (it != vnf.demand.end()) view.demand[v][r] = it->second;
    }
  }

  view.capacity.assign(nh, std::vector<double>(nr, 0.0));
  view.host_domain.resize(nh);
  for (int h = 0; h < nh; ++h) {
    const auto& host = sc.host_graph.hosts.at(view.host_ids[h]);
    view.host_domain[h] = host.domain;
    for (int r = 0; r < nr; ++r) {
      auto it = host.capacity.find(view.resource_ids[r]);
      if (it != host.capacity.end()) view.capacity[h][r] = it->second;
    }
  }

  view.link_cap.assign(nh, std::vector<double>(nh, 0.0));
  view.link_del.assign(nh, std::vector<double>(nh, kInf));
  for (int h = 0; h < nh; ++h) {
    view.link_cap[h][h] = kInf;
    view.link_del[h][h] = 0.0;
  }
  for (const auto& [pair, bw] : sc.host_graph.link_capacity) {
    if (pair.first == pair.second) continue;
    int h1 = view.host_index(pair.first);
    int h2 = view.host_index(pair.second);
    if (h1 >= 0 && h2 >= 0) view.link_cap[h1][h2] = bw;
  }
  for (const auto& [pair, delay] : sc.host_graph.link_delay) {
    if (pair.first == pair.second) continue;
    int h1 = view.host_index(pair.first);
    int h2 = view.host_index(pair.second);
    if (h1 >= 0 && h2 >= 0) view.link_del[h1][h2] = delay;
  }

  view.cost.assign(nh, std::vector<double>(nv, kInf));
  for (int h = 0; h < nh; ++h)
    for (int v = 0; v < nv; ++v)
      view.cost[h][v] = sc.host_graph.placement_cost(view.host_ids[h], view.vnf_ids[v]);

  for (const auto& [pair, rate] : sc.vnffg.traffic) {
    if (rate <= 0) continue;
    int v1 = view.vnf_index(pair.first);
    int v2 = view.vnf_index(pair.second);
    if (v1 >= 0 && v2 >= 0) view.flows.push_back({v1, v2, rate});
  }

  for (const auto& [id, svc] : sc.services) {
    Service s;
    s.id = id;
    s.max_delay_ms = svc.max_delay_ms;
    s.max_cost = svc.max_cost;
    s.visits.assign(nv, 0.0);
    for (const auto& [vid, n] : svc.visits) {
      int v = view.vnf_index(vid);
      if (v >= 0) s.visits[v] = n;
    }
    for (const auto& [pair, p] : svc.transition) {
      if (p <= 0) continue;
      int v1 = view.vnf_index(pair.first);
      int v2 = view.vnf_index(pair.second);
      if (v1 >= 0 && v2 >= 0) s.transitions.push_back({v1, v2, p});
    }
    view.services.push_back(std::move(s));
  }
  return view;
}

int ScenarioView::vnf_index(const std::string& id) const {
  auto it = std::lower_bound(vnf_ids.begin(), vnf_ids.end(), id);
  if (it == vnf_ids.end() || *it != id) return -1;
  return static_cast<int>(it - vnf_ids.begin());
}

int ScenarioView::host_index(const std::string& id) const {
  auto it = std::lower_bound(host_ids.begin(), host_ids.end(), id);
  if (it == host_ids.end() || *it != id) return -1;
  return static_cast<int>(it - host_ids.begin());
}

std::vector<int> ScenarioView::to_indices(const Placement& p) const {
  std::vector<int> assignment(vnf_ids.size(), -1);
  for (const auto& [vid, hid] : p.assignment) {
    int v = vnf_index(vid);
    if (v < 0) throw std::invalid_argument("placement references unknown vnf '" + vid + "'");
    int h = host_index(hid);
    if (h < 0) throw std::invalid_argument("placement references unknown host '" + hid + "'");
    assignment[v] = h;
  }
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    if (assignment[v] < 0)
      throw std::invalid_argument("placement leaves vnf '" + vnf_ids[v] + "' unplaced");
  }
  return assignment;
}

Placement ScenarioView::to_placement(const std::vector<int>& assignment) const {
  Placement p;
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    if (assignment[v] >= 0) p.assignment[vnf_ids[v]] = host_ids[assignment[v]];
  }
  return p;
}

std::vector<Violation> capacity_violations(const ScenarioView& view,
                                           const std::vector<int>& assignment) {
  std::vector<Violation> out;
  const int nr = static_cast<int>(view.resource_ids.size());
  std::vector<std::vector<double>> load(view.host_count(), std::vector<double>(nr, 0.0));
  for (int v = 0; v < view.vnf_count(); ++v) {
    int h = assignment[v];
    if (h < 0) continue;
    for (int r = 0; r < nr; ++r) load[h][r] += view.demand[v][r];
  }
  for (int h = 0; h < view.host_count(); ++h) {
    for (int r = 0; r < nr; ++r) {
      if (load[h][r] > view.capacity[h][r])
        out.push_back({Violation::Kind::HostCapacity, view.host_ids[h], view.resource_ids[r],
                       load[h][r], view.capacity[h][r]});
    }
  }
  return out;
}

std::vector<Violation> link_violations(const ScenarioView& view,
                                       const std::vector<int>& assignment) {
  std::vector<Violation> out;
  std::map<std::pair<int, int>, double> pair_flow;
  for (const auto& flow : view.flows) {
    int h1 = assignment[flow.from];
    int h2 = assignment[flow.to];
    if (h1 < 0 || h2 < 0 || h1 == h2) continue;  // intra-host traffic is free
    pair_flow[{h1, h2}] += flow.rate;
  }
  for (const auto& [pair, flow] : pair_flow) {
    double cap = view.link_cap[pair.first][pair.second];
    if (flow > cap)
      out.push_back({Violation::Kind::LinkCapacity, view.host_ids[pair.first],
                     view.host_ids[pair.second], flow, cap});
  }
  return out;
}

double service_delay_ms(const ScenarioView& view, const std::vector<int>& assignment,
                        const ScenarioView::Service& service) {
  double total = 0.0;
  for (int v = 0; v < view.vnf_count(); ++v) {
    if (assignment[v] < 0) continue;
    if (service.visits[v] > 0) total += service.visits[v] * view.proc_delay[v];
  }
  for (const auto& t : service.transitions) {
    int h1 = assignment[t.from];
    int h2 = assignment[t.to];
    if (h1 < 0 || h2 < 0) continue;
    double weight = service.visits[t.from] * t.p;
    if (weight <= 0) continue;  // avoid 0 * inf on disconnected pairs
    total += weight * view.link_del[h1][h2];
  }
  return total;
}

double service_cost(const ScenarioView& view, const std::vector<int>& assignment,
                    const ScenarioView::Service& service) {
  double total = 0.0;
  for (int v = 0; v < view.vnf_count(); ++v) {
    int h = assignment[v];
    if (h < 0) continue;
    double n = service.visits[v];
    if (n <= 0) continue;
    total += view.cost[h][v] * n;
  }
  return total;
}

std::vector<Violation> feasibility_violations(const ScenarioView& view,
                                              const std::vector<int>& assignment) {
  auto out = capacity_violations(view, assignment);
  auto links = link_violations(view, assignment);
  out.insert(out.end(), links.begin(), links.end());
  for (const auto& svc : view.services) {
    double delay = service_delay_ms(view, assignment, svc);
    if (delay > svc.max_delay_ms)
      out.push_back({Violation::Kind::ServiceDelay, svc.id, "", delay, svc.max_delay_ms});
    double cost = service_cost(view, assignment, svc);
    if (cost > svc.max_cost)
      out.push_back({Violation::Kind::ServiceCost, svc.id, "", cost, svc.max_cost});
  }
  return out;
}

double max_utilization(const ScenarioView& view, const std::vector<int>& assignment) {
  const int nr = static_cast<int>(view.resource_ids.size());
  std::vector<std::vector<double>> load(view.host_count(), std::vector<double>(nr, 0.0));
  for (int v = 0; v < view.vnf_count(); ++v) {
    int h = assignment[v];
    if (h < 0) continue;
    for (int r = 0; r < nr; ++r) load[h][r] += view.demand[v][r];
  }
  double worst = 0.0;
  for (int h = 0; h < view.host_count(); ++h)
    for (int r = 0; r < nr; ++r)
      if (view.capacity[h][r] > 0) worst = std::max(worst, load[h][r] / view.capacity[h][r]);
  return worst;
}

double total_cost(const ScenarioView& view, const std::vector<int>& assignment) {
  double total = 0.0;
  for (const auto& svc : view.services) total += service_cost(view, assignment, svc);
  return total;
}

double total_delay_ms(const ScenarioView& view, const std::vector<int>& assignment) {
  double total = 0.0;
  for (const auto& svc : view.services) total += service_delay_ms(view, assignment, svc);
  return total;
}

double objective_value(const ScenarioView& view, const std::vector<int>& assignment,
                       Objective objective) {
  switch (objective) {
    case Objective::Cost: return total_cost(view, assignment);
    case Objective::Delay: return total_delay_ms(view, assignment);
    case Objective::Weighted:
      return total_cost(view, assignment) + total_delay_ms(view, assignment);
  }
  return 0.0;
}

std::vector<Violation> check_capacity(const Placement& p, const Scenario& sc) {
  auto view = ScenarioView::build(sc);
  return capacity_violations(view, view.to_indices(p));
}

std::vector<Violation> check_link_capacity(const Placement& p, const Scenario& sc) {
  auto view = ScenarioView::build(sc);
  return link_violations(view, view.to_indices(p));
}

double service_delay(const Placement& p, const ServiceSpec& s, const Scenario& sc) {
  auto view = ScenarioView::build(sc);
  auto assignment = view.to_indices(p);
  for (const auto& svc : view.services)
    if (svc.id == s.id) return service_delay_ms(view, assignment, svc);
  throw std::invalid_argument("service '" + s.id + "' is not part of the scenario");
}

double placement_cost(const Placement& p, const ServiceSpec& s, const Scenario& sc) {
  auto view = ScenarioView::build(sc);
  auto assignment = view.to_indices(p);
  for (const auto& svc : view.services)
    if (svc.id == s.id) return service_cost(view, assignment, svc);
  throw std::invalid_argument("service '" + s.id + "' is not part of the scenario");
}

std::vector<Violation> is_feasible(const Placement& p, const Scenario& sc) {
  auto view = ScenarioView::build(sc);
  return feasibility_violations(view, view.to_indices(p));
}

double max_utilization(const Placement& p, const Scenario& sc) {
  auto view = ScenarioView::build(sc);
  std::vector<int> assignment(view.vnf_count(), -1);
  for (const auto& [vid, hid] : p.assignment) {
    int v = view.vnf_index(vid);
    int h = view.host_index(hid);
    if (v < 0 || h < 0)
      throw std::invalid_argument("partial placement references unknown vnf or host");
    assignment[v] = h;
  }
  return max_utilization(view, assignment);
}

namespace {

// Depth-first enumeration in lexicographic assignment order with monotone
// pruning: a partial assignment that already violates a capacity, link,
// cost, or optimistic delay bound cannot be completed into a feasible one.
struct BruteForceSearch {
  const ScenarioView& view;
  Objective objective;
  BruteForceResult result;
  std::vector<int> assignment;
  std::vector<std::vector<double>> residual;            // [host][resource]
  std::vector<std::vector<double>> pair_flow;           // [h1][h2]
  std::vector<double> svc_cost;                         // per service
  double best = kInf;
  bool found = false;
  std::vector<int> best_assignment;

  explicit BruteForceSearch(const ScenarioView& v, Objective obj)
      : view(v), objective(obj), assignment(v.vnf_count(), -1), residual(v.capacity) {
    pair_flow.assign(v.host_count(), std::vector<double>(v.host_count(), 0.0));
    svc_cost.assign(v.services.size(), 0.0);
  }

  bool fits(int vnf, int host) const {
    for (std::size_t r = 0; r < view.resource_ids.size(); ++r)
      if (view.demand[vnf][r] > residual[host][r]) return false;
    return true;
  }

  bool links_ok(int vnf, int host) const {
    std::map<std::pair<int, int>, double> delta;
    for (const auto& flow : view.flows) {
      if (flow.from == vnf && assignment[flow.to] >= 0 && assignment[flow.to] != host)
        delta[{host, assignment[flow.to]}] += flow.rate;
      else if (flow.to == vnf && assignment[flow.from] >= 0 && assignment[flow.from] != host)
        delta[{assignment[flow.from], host}] += flow.rate;
    }
    for (const auto& [pair, added] : delta) {
      if (pair_flow[pair.first][pair.second] + added > view.link_cap[pair.first][pair.second])
        return false;
    }
    return true;
  }

  void apply_flows(int vnf, int host, double sign) {
    for (const auto& flow : view.flows) {
      if (flow.from == vnf && assignment[flow.to] >= 0 && assignment[flow.to] != host)
        pair_flow[host][assignment[flow.to]] += sign * flow.rate;
      else if (flow.to == vnf && assignment[flow.from] >= 0 && assignment[flow.from] != host)
        pair_flow[assignment[flow.from]][host] += sign * flow.rate;
    }
  }

  bool budgets_ok() const {
    for (std::size_t s = 0; s < view.services.size(); ++s) {
      const auto& svc = view.services[s];
      if (svc_cost[s] > svc.max_cost) return false;
      if (service_delay_ms(view, assignment, svc) > svc.max_delay_ms) return false;
    }
    return true;
  }

  void search(int vnf) {
    if (vnf == view.vnf_count()) {
      double value = objective_value(view, assignment, objective);
      if (!found || value < best) {
        found = true;
        best = value;
        best_assignment = assignment;
      }
      return;
    }
    for (int host = 0; host < view.host_count(); ++host) {
      ++result.assignments_considered;
      if (!fits(vnf, host) || !links_ok(vnf, host)) continue;
      if (view.cost[host][vnf] == kInf) continue;  // forbidden pairing
      for (std::size_t r = 0; r < view.resource_ids.size(); ++r)
        residual[host][r] -= view.demand[vnf][r];
      apply_flows(vnf, host, +1.0);
      assignment[vnf] = host;
      for (std::size_t s = 0; s < view.services.size(); ++s)
        svc_cost[s] += view.cost[host][vnf] * view.services[s].visits[vnf];
      if (budgets_ok()) search(vnf + 1);
      for (std::size_t s = 0; s < view.services.size(); ++s)
        svc_cost[s] -= view.cost[host][vnf] * view.services[s].visits[vnf];
      assignment[vnf] = -1;
      apply_flows(vnf, host, -1.0);
      for (std::size_t r = 0; r < view.resource_ids.size(); ++r)
        residual[host][r] += view.demand[vnf][r];
    }
  }
};

}  // namespace

BruteForceResult brute_force_place(const ScenarioView& view, Objective objective,
                                   std::uint64_t bound) {
  double space = std::pow(static_cast<double>(view.host_count()),
                          static_cast<double>(view.vnf_count()));
  if (space > static_cast<double>(bound)) {
    std::ostringstream os;
    os << "search space " << view.host_count() << "^" << view.vnf_count() << " exceeds bound "
       << bound;
    throw SearchSpaceTooLarge(os.str());
  }
  BruteForceSearch search(view, objective);
  search.search(0);
  BruteForceResult result = std::move(search.result);
  if (search.found) {
    result.placement = view.to_placement(search.best_assignment);
    result.objective_value = search.best;
  }
  return result;
}

BruteForceResult brute_force_place(const Scenario& sc, Objective objective,
                                   std::uint64_t bound) {
  return brute_force_place(ScenarioView::build(sc), objective, bound);
}

}  // namespace vnfp
