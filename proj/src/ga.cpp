#include "vnfp/ga.hpp"

#include <algorithm>
#include <cmath>

#include "vnfp/cluster.hpp"

namespace vnfp {

namespace {

constexpr int kSamplingRetriesPerSlot = 200;
constexpr int kPerturbationMoves = 3;

bool pairings_allowed(const ScenarioView& view, const std::vector<int>& assignment) {
  for (int v = 0; v < view.vnf_count(); ++v)
    if (assignment[v] >= 0 && view.cost[assignment[v]][v] == kInf) return false;
  return true;
}

bool admissible(const ScenarioView& view, const std::vector<int>& assignment) {
  return pairings_allowed(view, assignment) && feasibility_violations(view, assignment).empty();
}

std::vector<int> chromosome_to_indices(const Chromosome& c, const ScenarioView& view) {
  std::vector<int> assignment(view.vnf_count(), -1);
  for (const auto& [host, vnfs] : c.genes) {
    int h = view.host_index(host);
    if (h < 0) throw std::invalid_argument("chromosome references unknown host '" + host + "'");
    for (const auto& vnf : vnfs) {
      int v = view.vnf_index(vnf);
      if (v < 0) throw std::invalid_argument("chromosome references unknown vnf '" + vnf + "'");
      if (assignment[v] >= 0)
        throw std::invalid_argument("chromosome places vnf '" + vnf + "' twice");
      assignment[v] = h;
    }
  }
  for (int v = 0; v < view.vnf_count(); ++v)
    if (assignment[v] < 0)
      throw std::invalid_argument("chromosome leaves vnf '" + view.vnf_ids[v] + "' unplaced");
  return assignment;
}

Chromosome indices_to_chromosome(const std::vector<int>& assignment, const ScenarioView& view) {
  Chromosome c;
  for (const auto& host : view.host_ids) c.genes[host];  // every host is a gene
  for (int v = 0; v < view.vnf_count(); ++v)
    c.genes[view.host_ids[assignment[v]]].insert(view.vnf_ids[v]);
  return c;
}

// Repair rule shared with the cluster assignment stage: cheapest fitting
// host, resulting max-utilization breaks cost ties, host id breaks the rest.
int repair_pick(const ScenarioView& view, const std::vector<std::vector<double>>& residual,
                const std::vector<double>& host_util, int vnf) {
  int best = -1;
  double best_cost = kInf, best_util = kInf;
  for (int h = 0; h < view.host_count(); ++h) {
    if (view.cost[h][vnf] == kInf) continue;
    bool fits = true;
    for (std::size_t r = 0; r < view.resource_ids.size() && fits; ++r)
      fits = view.demand[vnf][r] <= residual[h][r];
    if (!fits) continue;
    double cost = view.cost[h][vnf];
    if (best >= 0 && cost > best_cost) continue;
    double util = 0.0;
    for (std::size_t r = 0; r < view.resource_ids.size(); ++r) {
      double cap = view.capacity[h][r];
      if (cap > 0)
        util = std::max(util, (cap - residual[h][r] + view.demand[vnf][r]) / cap);
    }
    for (int other = 0; other < view.host_count(); ++other)
      if (other != h) util = std::max(util, host_util[other]);
    if (best < 0 || cost < best_cost || (cost == best_cost && util < best_util)) {
      best = h;
      best_cost = cost;
      best_util = util;
    }
  }
  return best;
}

struct GaEngine {
  const ScenarioView& view;
  const Scenario& scenario;
  const GaConfig& cfg;
  Rng rng;

  struct Individual {
    std::vector<int> assign;
    double objective = 0.0;
  };

  GaEngine(const ScenarioView& v, const Scenario& sc, const GaConfig& c)
      : view(v), scenario(sc), cfg(c), rng(c.rng_seed) {}

  Individual wrap(std::vector<int> assign) const {
    double value = objective_value(view, assign, cfg.objective);
    return {std::move(assign), value};
  }

  std::vector<Individual> seed_pool() {
    std::vector<Individual> pool;
    const int budget = kSamplingRetriesPerSlot * cfg.pool_size;
    int attempts = 0;
    while (static_cast<int>(pool.size()) < cfg.pool_size && attempts < budget) {
      ++attempts;
      std::vector<int> assign(view.vnf_count());
      for (int v = 0; v < view.vnf_count(); ++v)
        assign[v] = rng.uniform_int(0, view.host_count() - 1);
      if (admissible(view, assign)) pool.push_back(wrap(std::move(assign)));
    }
    if (static_cast<int>(pool.size()) < cfg.pool_size) {
      auto base = cluster_seed();
      if (!base && pool.empty())
        throw CannotSeedPool("no feasible chromosome within " + std::to_string(budget) +
                             " samples and no cluster fallback");
      std::size_t cycle = 0;
      while (static_cast<int>(pool.size()) < cfg.pool_size) {
        std::vector<int> assign = base ? *base : pool[cycle++ % pool.size()].assign;
        for (int move = 0; move < kPerturbationMoves; ++move) {
          int v = rng.uniform_int(0, view.vnf_count() - 1);
          int h = rng.uniform_int(0, view.host_count() - 1);
          int old = assign[v];
          assign[v] = h;
          if (!admissible(view, assign)) assign[v] = old;
        }
        pool.push_back(wrap(std::move(assign)));
      }
    }
    return pool;
  }

  std::optional<std::vector<int>> cluster_seed() const {
    ClusterParams params;
    params.k = 1;
    auto seeded = place_clustered(scenario, params);
    if (!seeded.feasible()) return std::nullopt;
    return view.to_indices(*seeded.placement);
  }

  // Gene list of a parent ranked for adoption: (host, vnfs) pairs.
  struct Gene {
    int host;
    std::vector<int> vnfs;
    double quality_per_vnf;
    int parent;  // 0 or 1, first parent wins quality ties
  };

  double raw_quality(int host, const std::vector<int>& vnfs,
                     const std::vector<int>& parent_assign) const {
    double q = 0.0;
    if (cfg.objective == Objective::Cost) {
      for (int v : vnfs)
        for (const auto& svc : view.services)
          if (svc.visits[v] > 0) q += view.cost[host][v] * svc.visits[v];
      return q;
    }
    // delay objective: processing plus this gene's share of the parent's
    // propagation (full for internal edges, half for edges leaving it)
    std::vector<bool> in_gene(view.vnf_count(), false);
    for (int v : vnfs) in_gene[v] = true;
    for (int v : vnfs)
      for (const auto& svc : view.services)
        if (svc.visits[v] > 0) q += svc.visits[v] * view.proc_delay[v];
    for (const auto& svc : view.services) {
      for (const auto& t : svc.transitions) {
        if (!in_gene[t.from] && !in_gene[t.to]) continue;
        double weight = svc.visits[t.from] * t.p;
        if (weight <= 0) continue;
        double delay = view.link_del[parent_assign[t.from]][parent_assign[t.to]];
        if (!(delay < kInf)) continue;
        double share = (in_gene[t.from] && in_gene[t.to]) ? 1.0 : 0.5;
        q += share * weight * delay;
      }
    }
    return q;
  }

  std::vector<Gene> ranked_genes(const std::vector<int>& p1, const std::vector<int>& p2) const {
    std::vector<Gene> genes;
    for (int parent = 0; parent < 2; ++parent) {
      const auto& assign = parent == 0 ? p1 : p2;
      std::map<int, std::vector<int>> by_host;
      for (int v = 0; v < view.vnf_count(); ++v) by_host[assign[v]].push_back(v);
      for (auto& [host, vnfs] : by_host) {
        double per_vnf = raw_quality(host, vnfs, assign) / static_cast<double>(vnfs.size());
        genes.push_back({host, std::move(vnfs), per_vnf, parent});
      }
    }
    std::sort(genes.begin(), genes.end(), [](const Gene& a, const Gene& b) {
      if (a.quality_per_vnf != b.quality_per_vnf) return a.quality_per_vnf < b.quality_per_vnf;
      if (a.parent != b.parent) return a.parent < b.parent;
      return a.host < b.host;
    });
    return genes;
  }

  std::optional<std::vector<int>> crossover_idx(const std::vector<int>& p1,
                                                const std::vector<int>& p2) const {
    std::vector<int> child(view.vnf_count(), -1);
    for (const auto& gene : ranked_genes(p1, p2)) {
      bool clash = false;
      for (int v : gene.vnfs) clash |= child[v] >= 0;
      if (clash) continue;
      for (int v : gene.vnfs) child[v] = gene.host;
    }
    // repair leftovers with the assign-stage rule
    std::vector<std::vector<double>> residual = view.capacity;
    std::vector<double> host_util(view.host_count(), 0.0);
    auto recompute_util = [&](int h) {
      double util = 0.0;
      for (std::size_t r = 0; r < view.resource_ids.size(); ++r) {
        double cap = view.capacity[h][r];
        if (cap > 0) util = std::max(util, (cap - residual[h][r]) / cap);
      }
      host_util[h] = util;
    };
    for (int v = 0; v < view.vnf_count(); ++v) {
      if (child[v] < 0) continue;
      for (std::size_t r = 0; r < view.resource_ids.size(); ++r)
        residual[child[v]][r] -= view.demand[v][r];
    }
    for (int h = 0; h < view.host_count(); ++h) recompute_util(h);
    for (int v = 0; v < view.vnf_count(); ++v) {
      if (child[v] >= 0) continue;
      int host = repair_pick(view, residual, host_util, v);
      if (host < 0) return std::nullopt;
      child[v] = host;
      for (std::size_t r = 0; r < view.resource_ids.size(); ++r)
        residual[host][r] -= view.demand[v][r];
      recompute_util(host);
    }
    if (!admissible(view, child)) return std::nullopt;
    return child;
  }

  std::vector<int> mutate_idx(std::vector<int> assign) {
    if (rng.u01() >= cfg.mutation_rate) return assign;
    if (view.host_count() < 2) return assign;
    // draw a gene pair with something to swap; two empty genes are a no-op
    int h1 = 0, h2 = 0;
    std::vector<int> at_h1, at_h2;
    for (int attempt = 0; attempt < 8; ++attempt) {
      h1 = rng.uniform_int(0, view.host_count() - 1);
      h2 = rng.uniform_int(0, view.host_count() - 2);
      if (h2 >= h1) ++h2;
      at_h1.clear();
      at_h2.clear();
      for (int v = 0; v < view.vnf_count(); ++v) {
        if (assign[v] == h1) at_h1.push_back(v);
        if (assign[v] == h2) at_h2.push_back(v);
      }
      if (!at_h1.empty() || !at_h2.empty()) break;
    }
    auto mutated = assign;
    if (at_h1.empty() && at_h2.empty()) return assign;
    if (!at_h1.empty() && !at_h2.empty()) {
      // exchange or relocate; a pure exchange can never merge two genes,
      // which strands delay optima behind unreachable co-locations
      int v1 = at_h1[rng.uniform_int(0, static_cast<int>(at_h1.size()) - 1)];
      int v2 = at_h2[rng.uniform_int(0, static_cast<int>(at_h2.size()) - 1)];
      switch (rng.uniform_int(0, 2)) {
        case 0:
          mutated[v1] = h2;
          mutated[v2] = h1;
          break;
        case 1: mutated[v1] = h2; break;
        case 2: mutated[v2] = h1; break;
      }
    } else if (at_h1.empty()) {
      int v2 = at_h2[rng.uniform_int(0, static_cast<int>(at_h2.size()) - 1)];
      mutated[v2] = h1;
    } else {
      int v1 = at_h1[rng.uniform_int(0, static_cast<int>(at_h1.size()) - 1)];
      mutated[v1] = h2;
    }
    return admissible(view, mutated) ? mutated : assign;
  }

  GaResult run() {
    auto pool = seed_pool();
    sort_pool(pool);
    GaResult out;
    out.best_objective_trace.push_back(pool.front().objective);

    for (int gen = 0; gen < cfg.generations; ++gen) {
      std::vector<Individual> offspring;
      offspring.reserve(cfg.pool_size);
      for (int i = 0; i < cfg.pool_size; ++i) {
        std::vector<int> child;
        if (rng.u01() < cfg.crossover_rate && pool.size() >= 2) {
          int a = rng.uniform_int(0, static_cast<int>(pool.size()) - 1);
          int b = rng.uniform_int(0, static_cast<int>(pool.size()) - 2);
          if (b >= a) ++b;
          auto crossed = crossover_idx(pool[a].assign, pool[b].assign);
          child = crossed ? std::move(*crossed) : pool[a].assign;
        } else {
          child = pool[rng.uniform_int(0, static_cast<int>(pool.size()) - 1)].assign;
        }
        child = mutate_idx(std::move(child));
        offspring.push_back(wrap(std::move(child)));
      }
      pool.insert(pool.end(), std::make_move_iterator(offspring.begin()),
                  std::make_move_iterator(offspring.end()));
      sort_pool(pool);
      // top-K distinct solutions; duplicates would collapse the pool and
      // leave mutation as the only explorer
      std::vector<Individual> survivors;
      for (auto& individual : pool) {
        if (!survivors.empty() && survivors.back().assign == individual.assign) continue;
        survivors.push_back(std::move(individual));
        if (static_cast<int>(survivors.size()) == cfg.pool_size) break;
      }
      pool = std::move(survivors);
      out.best_objective_trace.push_back(pool.front().objective);
    }

    out.result = finalize_assignment(view, pool.front().assign);
    return out;
  }

  static void sort_pool(std::vector<Individual>& pool) {
    std::sort(pool.begin(), pool.end(), [](const Individual& a, const Individual& b) {
      if (a.objective != b.objective) return a.objective < b.objective;
      return a.assign < b.assign;
    });
  }
};

void validate_config(const GaConfig& cfg) {
  if (cfg.pool_size < 2) throw std::invalid_argument("pool size must be >= 2");
  if (cfg.generations < 1) throw std::invalid_argument("generations must be >= 1");
  if (cfg.crossover_rate < 0 || cfg.crossover_rate > 1)
    throw std::invalid_argument("crossover rate must be in [0, 1]");
  if (cfg.mutation_rate < 0 || cfg.mutation_rate > 1)
    throw std::invalid_argument("mutation rate must be in [0, 1]");
}

}  // namespace

Placement Chromosome::to_placement() const {
  Placement p;
  for (const auto& [host, vnfs] : genes)
    for (const auto& vnf : vnfs) p.assignment[vnf] = host;
  return p;
}

Chromosome Chromosome::from_placement(const Placement& p, const Scenario& sc) {
  Chromosome c;
  for (const auto& [host, _] : sc.host_graph.hosts) c.genes[host];
  for (const auto& [vnf, host] : p.assignment) c.genes.at(host).insert(vnf);
  return c;
}

std::vector<Chromosome> init_pool(const Scenario& sc, const GaConfig& cfg) {
  validate_config(cfg);
  auto view = ScenarioView::build(sc);
  GaEngine engine(view, sc, cfg);
  std::vector<Chromosome> out;
  for (const auto& individual : engine.seed_pool())
    out.push_back(indices_to_chromosome(individual.assign, view));
  return out;
}

double gene_quality(const std::string& host, const std::set<std::string>& vnfs,
                    const Chromosome& parent, const Scenario& sc, Objective objective) {
  if (vnfs.empty()) return 0.0;
  auto view = ScenarioView::build(sc);
  GaConfig cfg;
  cfg.objective = objective;
  GaEngine engine(view, sc, cfg);
  int h = view.host_index(host);
  if (h < 0) throw std::invalid_argument("unknown host '" + host + "'");
  std::vector<int> vnf_idx;
  for (const auto& vnf : vnfs) {
    int v = view.vnf_index(vnf);
    if (v < 0) throw std::invalid_argument("unknown vnf '" + vnf + "'");
    vnf_idx.push_back(v);
  }
  std::vector<int> parent_assign = objective == Objective::Cost
                                       ? std::vector<int>(view.vnf_count(), -1)
                                       : chromosome_to_indices(parent, view);
  return engine.raw_quality(h, vnf_idx, parent_assign);
}

std::optional<Chromosome> crossover(const Chromosome& p1, const Chromosome& p2,
                                    const Scenario& sc, const GaConfig& cfg) {
  auto view = ScenarioView::build(sc);
  GaEngine engine(view, sc, cfg);
  auto child = engine.crossover_idx(chromosome_to_indices(p1, view),
                                    chromosome_to_indices(p2, view));
  if (!child) return std::nullopt;
  return indices_to_chromosome(*child, view);
}

Chromosome mutate(const Chromosome& c, const Scenario& sc, const GaConfig& cfg, Rng& rng) {
  auto view = ScenarioView::build(sc);
  GaEngine engine(view, sc, cfg);
  engine.rng = rng;
  auto mutated = engine.mutate_idx(chromosome_to_indices(c, view));
  rng = engine.rng;
  return indices_to_chromosome(mutated, view);
}

GaResult evolve(const Scenario& sc, const GaConfig& cfg) {
  validate_config(cfg);
  auto view = ScenarioView::build(sc);
  GaEngine engine(view, sc, cfg);
  return engine.run();
}

}  // namespace vnfp
