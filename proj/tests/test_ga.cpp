#include "vnfp/ga.hpp"

#include "doctest.h"
#include "support.hpp"
#include "vnfp/evaluator.hpp"

using namespace vnfp;
using testing::place;

namespace {

GaConfig small_config(Objective objective = Objective::Cost, std::uint64_t seed = 1) {
  GaConfig cfg;
  cfg.pool_size = 8;
  cfg.generations = 50;
  cfg.objective = objective;
  cfg.rng_seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("init pool yields only feasible chromosomes") {
  auto sc = testing::t1();
  auto cfg = small_config();
  cfg.pool_size = 4;
  auto pool = init_pool(sc, cfg);
  REQUIRE(pool.size() == 4);
  for (const auto& chromosome : pool)
    CHECK(is_feasible(chromosome.to_placement(), sc).empty());
}

TEST_CASE("init pool fails loudly when nothing is feasible") {
  auto sc = testing::t1();
  sc.vnffg.vnfs.at("a").demand["cpu"] = 99.0;
  CHECK_THROWS_AS(init_pool(sc, small_config()), CannotSeedPool);
}

TEST_CASE("single-host scenarios collapse to one chromosome") {
  auto sc = testing::t1();
  sc.host_graph.hosts.erase("h2");
  sc.host_graph.link_delay.clear();
  sc.host_graph.link_capacity.clear();
  sc.host_graph.cost.erase({"h2", "a"});
  sc.host_graph.cost.erase({"h2", "b"});
  REQUIRE(validate_scenario(sc).empty());

  auto cfg = small_config();
  cfg.pool_size = 2;
  auto pool = init_pool(sc, cfg);
  REQUIRE(pool.size() == 2);
  CHECK(pool[0] == pool[1]);
}

TEST_CASE("gene quality sums cost over the gene's VNFs") {
  auto sc = testing::t1();
  auto parent = Chromosome::from_placement(place({{"a", "h1"}, {"b", "h1"}}), sc);
  CHECK(gene_quality("h1", {"a", "b"}, parent, sc, Objective::Cost) == doctest::Approx(2.0));
  CHECK(gene_quality("h1", {}, parent, sc, Objective::Cost) == doctest::Approx(0.0));
  CHECK(gene_quality("h2", {"a"}, parent, sc, Objective::Cost) == doctest::Approx(2.0));
}

TEST_CASE("gene quality for the delay objective includes propagation shares") {
  auto sc = testing::t1();
  auto split = Chromosome::from_placement(place({{"a", "h1"}, {"b", "h2"}}), sc);
  // processing 1 + half of the 2ms inter-host hop
  CHECK(gene_quality("h1", {"a"}, split, sc, Objective::Delay) == doctest::Approx(2.0));
  auto together = Chromosome::from_placement(place({{"a", "h1"}, {"b", "h1"}}), sc);
  CHECK(gene_quality("h1", {"a", "b"}, together, sc, Objective::Delay) ==
        doctest::Approx(2.0));
}

TEST_CASE("crossover of identical parents reproduces them") {
  auto sc = testing::t1();
  auto parent = Chromosome::from_placement(place({{"a", "h1"}, {"b", "h1"}}), sc);
  auto child = crossover(parent, parent, sc, small_config());
  REQUIRE(child.has_value());
  CHECK(*child == parent);
}

TEST_CASE("crossover adopts the best whole genes") {
  auto sc = testing::t1();
  auto p1 = Chromosome::from_placement(place({{"a", "h1"}, {"b", "h1"}}), sc);
  auto p2 = Chromosome::from_placement(place({{"a", "h1"}, {"b", "h2"}}), sc);
  auto child = crossover(p1, p2, sc, small_config(Objective::Cost));
  REQUIRE(child.has_value());
  // per-VNF quality 1.0 for (h1,{a,b}) ties (h1,{a}); the first parent wins
  CHECK(*child == p1);
}

TEST_CASE("conflicting genes drop and leftovers are repaired") {
  auto sc = testing::t1();
  auto p1 = Chromosome::from_placement(place({{"a", "h1"}, {"b", "h2"}}), sc);
  auto p2 = Chromosome::from_placement(place({{"a", "h2"}, {"b", "h1"}}), sc);
  auto child = crossover(p1, p2, sc, small_config(Objective::Cost));
  REQUIRE(child.has_value());
  CHECK(is_feasible(child->to_placement(), sc).empty());
}

TEST_CASE("mutation respects its rate and feasibility") {
  auto sc = testing::t1();
  auto chromosome = Chromosome::from_placement(place({{"a", "h1"}, {"b", "h2"}}), sc);

  auto cfg = small_config();
  cfg.mutation_rate = 0.0;
  Rng rng(3);
  CHECK(mutate(chromosome, sc, cfg, rng) == chromosome);

  cfg.mutation_rate = 1.0;
  bool saw_change = false;
  for (int i = 0; i < 20; ++i) {
    auto mutated = mutate(chromosome, sc, cfg, rng);
    CHECK(is_feasible(mutated.to_placement(), sc).empty());
    saw_change |= !(mutated == chromosome);
  }
  CHECK(saw_change);  // a->h2, b->h1 is feasible, so swaps do land
}

TEST_CASE("single-gene chromosomes cannot mutate") {
  auto sc = testing::t1();
  sc.host_graph.hosts.erase("h2");
  sc.host_graph.link_delay.clear();
  sc.host_graph.link_capacity.clear();
  sc.host_graph.cost.erase({"h2", "a"});
  sc.host_graph.cost.erase({"h2", "b"});
  auto chromosome = Chromosome::from_placement(place({{"a", "h1"}, {"b", "h1"}}), sc);
  auto cfg = small_config();
  cfg.mutation_rate = 1.0;
  Rng rng(5);
  CHECK(mutate(chromosome, sc, cfg, rng) == chromosome);
}

TEST_CASE("evolution reaches the exhaustive optimum on tiny scenarios") {
  auto sc = testing::t1();
  auto cfg = small_config(Objective::Cost, 7);
  auto result = evolve(sc, cfg);
  REQUIRE(result.result.feasible());
  CHECK(result.result.metrics.total_cost ==
        doctest::Approx(brute_force_place(sc, Objective::Cost).objective_value));

  cfg.objective = Objective::Delay;
  auto by_delay = evolve(sc, cfg);
  REQUIRE(by_delay.result.feasible());
  CHECK(by_delay.result.metrics.total_delay_ms == doctest::Approx(2.0));
}

TEST_CASE("no operators means the best of the initial pool") {
  auto sc = testing::t1();
  GaConfig cfg;
  cfg.pool_size = 6;
  cfg.generations = 1;
  cfg.crossover_rate = 0.0;
  cfg.mutation_rate = 0.0;
  cfg.rng_seed = 11;
  auto result = evolve(sc, cfg);
  REQUIRE(result.result.feasible());
  REQUIRE(result.best_objective_trace.size() == 2);
  CHECK(result.best_objective_trace[0] == result.best_objective_trace[1]);
}

TEST_CASE("best objective never worsens across generations") {
  Rng scenario_rng(1234);
  for (int trial = 0; trial < 5; ++trial) {
    auto sc = testing::random_scenario(scenario_rng);
    auto cfg = small_config(trial % 2 == 0 ? Objective::Cost : Objective::Delay,
                            1000 + trial);
    cfg.generations = 30;
    auto result = evolve(sc, cfg);
    REQUIRE(result.result.feasible());
    for (std::size_t g = 1; g < result.best_objective_trace.size(); ++g)
      CHECK(result.best_objective_trace[g] <= result.best_objective_trace[g - 1]);
    CHECK(is_feasible(*result.result.placement, sc).empty());
  }
}

TEST_CASE("fixed seeds give identical runs") {
  Rng scenario_rng(888);
  auto sc = testing::random_scenario(scenario_rng);
  auto cfg = small_config(Objective::Cost, 42);
  auto first = evolve(sc, cfg);
  auto second = evolve(sc, cfg);
  REQUIRE(first.result.feasible());
  CHECK(*first.result.placement == *second.result.placement);
  CHECK(first.best_objective_trace == second.best_objective_trace);
}

TEST_CASE("forced swaps on the canonical scenario stay feasible") {
  auto sc = testing::t1();
  auto chromosome = Chromosome::from_placement(place({{"a", "h1"}, {"b", "h2"}}), sc);
  auto cfg = small_config();
  cfg.mutation_rate = 1.0;
  Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    chromosome = mutate(chromosome, sc, cfg, rng);
    CHECK(is_feasible(chromosome.to_placement(), sc).empty());
  }
}
