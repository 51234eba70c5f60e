#include "vnfp/evaluator.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace vnfp;
using testing::place;

TEST_CASE("host capacity constraint") {
  auto sc = testing::t1();
  CHECK(check_capacity(place({{"a", "h1"}, {"b", "h1"}}), sc).empty());  // 12 <= 12

  auto violations = check_capacity(place({{"a", "h2"}, {"b", "h2"}}), sc);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].a == "h2");
  CHECK(violations[0].b == "cpu");
  CHECK(violations[0].actual == doctest::Approx(12.0));
  CHECK(violations[0].limit == doctest::Approx(10.0));
}

TEST_CASE("empty scenario placement is vacuously fine") {
  Scenario sc;
  sc.resource_types = {"cpu"};
  sc.host_graph.hosts = {{"h1", {"h1", {{"cpu", 4.0}}, "d0", "d0"}}};
  REQUIRE(validate_scenario(sc).empty());
  CHECK(check_capacity(Placement{}, sc).empty());
  CHECK(is_feasible(Placement{}, sc).empty());
}

TEST_CASE("link capacity constraint") {
  auto sc = testing::t1();
  CHECK(check_link_capacity(place({{"a", "h1"}, {"b", "h2"}}), sc).empty());  // 3 <= 5

  auto heavy = sc;
  heavy.vnffg.traffic[{"a", "b"}] = 7.0;
  auto violations = check_link_capacity(place({{"a", "h1"}, {"b", "h2"}}), heavy);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].a == "h1");
  CHECK(violations[0].b == "h2");
  CHECK(violations[0].actual == doctest::Approx(7.0));
  CHECK(violations[0].limit == doctest::Approx(5.0));

  // intra-host pairs never violate
  CHECK(check_link_capacity(place({{"a", "h1"}, {"b", "h1"}}), heavy).empty());
}

TEST_CASE("service delay formula") {
  auto sc = testing::t1();
  const auto& s1 = sc.services.at("s1");
  CHECK(service_delay(place({{"a", "h1"}, {"b", "h2"}}), s1, sc) == doctest::Approx(4.0));
  CHECK(service_delay(place({{"a", "h1"}, {"b", "h1"}}), s1, sc) == doctest::Approx(2.0));

  auto idle = sc;
  auto& svc = idle.services.at("s1");
  svc.visits["a"] = 0.0;
  svc.visits["b"] = 0.0;
  CHECK(service_delay(place({{"a", "h1"}, {"b", "h2"}}), svc, idle) == doctest::Approx(0.0));
}

TEST_CASE("placement cost formula") {
  auto sc = testing::t1();
  const auto& s1 = sc.services.at("s1");
  CHECK(placement_cost(place({{"a", "h1"}, {"b", "h2"}}), s1, sc) == doctest::Approx(3.0));
  CHECK(placement_cost(place({{"a", "h1"}, {"b", "h1"}}), s1, sc) == doctest::Approx(2.0));

  auto idle = sc;
  auto& svc = idle.services.at("s1");
  svc.visits["a"] = 0.0;
  svc.visits["b"] = 0.0;
  CHECK(placement_cost(place({{"a", "h1"}, {"b", "h2"}}), svc, idle) == doctest::Approx(0.0));
}

TEST_CASE("aggregate feasibility verdicts") {
  auto sc = testing::t1();
  CHECK(is_feasible(place({{"a", "h1"}, {"b", "h1"}}), sc).empty());
  CHECK_FALSE(is_feasible(place({{"a", "h2"}, {"b", "h2"}}), sc).empty());

  auto tight = sc;
  tight.services.at("s1").max_delay_ms = 3.0;
  auto violations = is_feasible(place({{"a", "h1"}, {"b", "h2"}}), tight);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == Violation::Kind::ServiceDelay);
}

TEST_CASE("feasibility equals the conjunction of the four checks") {
  Rng rng(7);
  for (int i = 0; i < 40; ++i) {
    testing::RandomScenarioParams params;
    params.host_min = 3;
    params.host_max = 6;
    params.vnf_min = 3;
    params.vnf_max = 6;
    params.max_delay_ms = rng.uniform_int(10, 60);  // sometimes binding
    params.max_cost = rng.uniform_int(20, 80);
    auto sc = testing::random_scenario(rng, params);
    auto view = ScenarioView::build(sc);

    std::vector<int> assignment(view.vnf_count());
    for (int v = 0; v < view.vnf_count(); ++v)
      assignment[v] = rng.uniform_int(0, view.host_count() - 1);
    auto p = view.to_placement(assignment);

    bool individually_ok = check_capacity(p, sc).empty() &&
                           check_link_capacity(p, sc).empty();
    for (const auto& [_, svc] : sc.services) {
      individually_ok = individually_ok && service_delay(p, svc, sc) <= svc.max_delay_ms &&
                        placement_cost(p, svc, sc) <= svc.max_cost;
    }
    CHECK(is_feasible(p, sc).empty() == individually_ok);
  }
}

TEST_CASE("service delay only depends on delay values, not host names") {
  auto sc = testing::t1();
  const auto& s1 = sc.services.at("s1");
  double before = service_delay(place({{"a", "h1"}, {"b", "h2"}}), s1, sc);

  // relabel h1 -> x9, h2 -> y3
  Scenario relabeled;
  relabeled.resource_types = sc.resource_types;
  relabeled.vnffg = sc.vnffg;
  relabeled.services = sc.services;
  auto rename = [](const std::string& id) { return id == "h1" ? "x9" : "y3"; };
  for (const auto& [id, host] : sc.host_graph.hosts) {
    Host copy = host;
    copy.id = rename(id);
    relabeled.host_graph.hosts.emplace(copy.id, copy);
  }
  for (const auto& [pair, v] : sc.host_graph.link_delay)
    relabeled.host_graph.link_delay[{rename(pair.first), rename(pair.second)}] = v;
  for (const auto& [pair, v] : sc.host_graph.link_capacity)
    relabeled.host_graph.link_capacity[{rename(pair.first), rename(pair.second)}] = v;
  for (const auto& [pair, v] : sc.host_graph.cost)
    relabeled.host_graph.cost[{rename(pair.first), pair.second}] = v;

  double after =
      service_delay(place({{"a", "x9"}, {"b", "y3"}}), relabeled.services.at("s1"), relabeled);
  CHECK(before == after);
}

TEST_CASE("max utilization over partial and complete placements") {
  auto sc = testing::t1();
  CHECK(max_utilization(place({{"a", "h1"}, {"b", "h1"}}), sc) == doctest::Approx(1.0));
  CHECK(max_utilization(Placement{}, sc) == doctest::Approx(0.0));
  CHECK(max_utilization(place({{"a", "h1"}, {"b", "h2"}}), sc) == doctest::Approx(0.8));
}

TEST_CASE("max utilization is monotone under growing placements") {
  Rng rng(99);
  for (int i = 0; i < 20; ++i) {
    auto sc = testing::random_scenario(rng);
    auto view = ScenarioView::build(sc);
    std::vector<int> assignment(view.vnf_count(), -1);
    double previous = 0.0;
    for (int v = 0; v < view.vnf_count(); ++v) {
      assignment[v] = rng.uniform_int(0, view.host_count() - 1);
      double current = max_utilization(view, assignment);
      CHECK(current >= previous);
      previous = current;
    }
  }
}

TEST_CASE("brute force finds the optimum on the canonical scenario") {
  auto sc = testing::t1();

  auto by_delay = brute_force_place(sc, Objective::Delay);
  REQUIRE(by_delay.placement.has_value());
  CHECK(*by_delay.placement == place({{"a", "h1"}, {"b", "h1"}}));
  CHECK(by_delay.objective_value == doctest::Approx(2.0));

  auto by_cost = brute_force_place(sc, Objective::Cost);
  REQUIRE(by_cost.placement.has_value());
  CHECK(*by_cost.placement == place({{"a", "h1"}, {"b", "h1"}}));
  CHECK(by_cost.objective_value == doctest::Approx(2.0));
}

TEST_CASE("brute force respects capacity and reports the runner-up") {
  auto sc = testing::t1();
  sc.host_graph.hosts.at("h1").capacity["cpu"] = 10.0;  // co-location now impossible
  auto best = brute_force_place(sc, Objective::Delay);
  REQUIRE(best.placement.has_value());
  CHECK(best.objective_value == doctest::Approx(4.0));
  CHECK(*best.placement == place({{"a", "h1"}, {"b", "h2"}}));  // lexicographic tie-break
}

TEST_CASE("brute force reports infeasible scenarios") {
  auto sc = testing::t1();
  sc.vnffg.vnfs.at("a").demand["cpu"] = 99.0;
  auto best = brute_force_place(sc, Objective::Cost);
  CHECK_FALSE(best.placement.has_value());
}

TEST_CASE("brute force refuses oversized search spaces") {
  auto sc = testing::t1();
  CHECK_THROWS_AS(brute_force_place(sc, Objective::Cost, 3), SearchSpaceTooLarge);
}

TEST_CASE("weighted objective blends cost and delay") {
  auto sc = testing::t1();
  auto view = ScenarioView::build(sc);
  auto assignment = view.to_indices(place({{"a", "h1"}, {"b", "h2"}}));
  CHECK(objective_value(view, assignment, Objective::Weighted) ==
        doctest::Approx(3.0 + 4.0));
}
