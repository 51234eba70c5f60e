#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "vnfp/evaluator.hpp"
#include "vnfp/model.hpp"
#include "vnfp/result.hpp"
#include "vnfp/rng.hpp"

namespace vnfp {

/// A placement solution in gene form: every host of the scenario is a gene
/// holding the (possibly empty) set of VNFs placed at it.
struct Chromosome {
  std::map<std::string, std::set<std::string>> genes;  // host -> vnfs

  Placement to_placement() const;
  static Chromosome from_placement(const Placement& p, const Scenario& sc);

  bool operator==(const Chromosome&) const = default;
};

struct GaConfig {
  int pool_size = 20;          // K >= 2
  int generations = 200;       // G >= 1
  double crossover_rate = 0.8;
  double mutation_rate = 0.15;  // per chromosome, one change when triggered
  Objective objective = Objective::Cost;
  std::uint64_t rng_seed = 0;
};

struct CannotSeedPool : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// K feasible chromosomes: uniform random assignments rejection-sampled
/// against the constraints, topping up from perturbed cluster placements if
/// sampling cannot fill the pool. Throws CannotSeedPool when neither works.
std::vector<Chromosome> init_pool(const Scenario& sc, const GaConfig& cfg);

/// The crossover ranking score of one gene: placement cost of its VNFs for
/// the cost objective, processing plus the gene's share of the parent's
/// propagation delay for the delay objective. Lower is better.
double gene_quality(const std::string& host, const std::set<std::string>& vnfs,
                    const Chromosome& parent, const Scenario& sc, Objective objective);

/// Quality-ranked gene adoption from both parents, leftovers repaired
/// cost-greedily. Returns nothing when the child violates a constraint.
std::optional<Chromosome> crossover(const Chromosome& p1, const Chromosome& p2,
                                    const Scenario& sc, const GaConfig& cfg);

/// With probability cfg.mutation_rate, swaps one VNF between two uniformly
/// chosen genes (a move when one of them is empty). Infeasible results are
/// rolled back.
Chromosome mutate(const Chromosome& c, const Scenario& sc, const GaConfig& cfg, Rng& rng);

struct GaResult {
  PlacementResult result;
  /// Best pool objective per generation; entry 0 is the initial pool.
  std::vector<double> best_objective_trace;
};

/// Runs the full loop: offspring by crossover and mutation each generation,
/// survival of the top-K by fitness, best chromosome returned.
GaResult evolve(const Scenario& sc, const GaConfig& cfg);

}  // namespace vnfp
