#include "vnfp/infrastructure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "vnfp/rng.hpp"
#include "vnfp/scenario_gen.hpp"

using namespace vnfp;

namespace {

// Independent oracle: enumerate every simple machine-to-machine path whose
// interior nodes are switches, and keep the smallest latency sum.
double min_latency_oracle(const PhysicalInfra& infra, const std::string& from,
                          const std::string& to) {
  std::map<std::string, std::vector<std::pair<std::string, double>>> adj;
  for (const auto& l : infra.phys_links) {
    adj[l.a].push_back({l.b, l.latency_ms});
    adj[l.b].push_back({l.a, l.latency_ms});
  }
  std::set<std::string> machines;
  for (const auto& m : infra.machines) machines.insert(m.id);

  double best = kInf;
  std::set<std::string> visited;
  std::function<void(const std::string&, double)> walk = [&](const std::string& node,
                                                             double latency) {
    if (node == to) {
      best = std::min(best, latency);
      return;
    }
    if (machines.count(node) && node != from) return;  // machines are terminals
    visited.insert(node);
    for (const auto& [next, lat] : adj[node])
      if (!visited.count(next)) walk(next, latency + lat);
    visited.erase(node);
  };
  walk(from, 0.0);
  return best;
}

PhysicalInfra two_machines_one_switch() {
  PhysicalInfra infra;
  infra.pops = {{"pop0", "d0"}};
  infra.machines = {{"m1", "pop0", {{"cpu", 4.0}}}, {"m2", "pop0", {{"cpu", 4.0}}}};
  infra.switches = {"sw"};
  infra.phys_links = {{"m1", "sw", 10.0, 1.0}, {"m2", "sw", 10.0, 1.0}};
  return infra;
}

// Two PoPs of two machines each, joined by a fast and a slow switch path.
PhysicalInfra two_pops() {
  PhysicalInfra infra;
  infra.pops = {{"popA", "d0"}, {"popB", "d0"}};
  infra.machines = {{"a1", "popA", {{"cpu", 4.0}}},
                    {"a2", "popA", {{"cpu", 4.0}}},
                    {"b1", "popB", {{"cpu", 4.0}}},
                    {"b2", "popB", {{"cpu", 4.0}}}};
  infra.switches = {"sA", "sB", "fast", "slow"};
  infra.phys_links = {{"a1", "sA", 100.0, 0.5}, {"a2", "sA", 100.0, 0.5},
                      {"b1", "sB", 100.0, 0.5}, {"b2", "sB", 100.0, 0.5},
                      {"sA", "fast", 40.0, 1.0}, {"fast", "sB", 40.0, 1.0},
                      {"sA", "slow", 90.0, 2.0}, {"slow", "sB", 90.0, 2.0}};
  return infra;
}

}  // namespace

TEST_CASE("level 1 abstracts one switch into a 2ms virtual link") {
  auto hg = abstract_level1(two_machines_one_switch(), {});
  REQUIRE(hg.hosts.size() == 2);
  CHECK(hg.delay_between("m1", "m2") == doctest::Approx(2.0));
  CHECK(hg.capacity_between("m1", "m2") == doctest::Approx(10.0));
  CHECK(hg.delay_between("m2", "m1") == doctest::Approx(2.0));
}

TEST_CASE("level 1 of a single machine has no links") {
  PhysicalInfra infra;
  infra.pops = {{"pop0", "d0"}};
  infra.machines = {{"m1", "pop0", {{"cpu", 4.0}}}};
  auto hg = abstract_level1(infra, {});
  CHECK(hg.hosts.size() == 1);
  CHECK(hg.link_delay.empty());
}

TEST_CASE("level 1 on a fat-tree is fully connected") {
  auto infra = gen_fat_tree(FatTreeParams{});
  auto hg = abstract_level1(infra, {});
  CHECK(hg.hosts.size() == 16);
  CHECK(hg.link_delay.size() == 240);  // 16 * 15 ordered pairs
  CHECK(hg.link_capacity.size() == 240);
}

TEST_CASE("disconnected pairs lose their link, full disconnection throws") {
  PhysicalInfra infra;
  infra.pops = {{"pop0", "d0"}};
  infra.machines = {{"m1", "pop0", {{"cpu", 4.0}}},
                    {"m2", "pop0", {{"cpu", 4.0}}},
                    {"m3", "pop0", {{"cpu", 4.0}}}};
  infra.switches = {"sw"};
  infra.phys_links = {{"m1", "sw", 10.0, 1.0}, {"m2", "sw", 10.0, 1.0}};  // m3 isolated
  auto hg = abstract_level1(infra, {});
  CHECK(hg.link_delay.count({"m1", "m2"}) == 1);
  CHECK(hg.link_delay.count({"m1", "m3"}) == 0);
  CHECK(hg.capacity_between("m1", "m3") == 0.0);

  infra.phys_links.clear();
  CHECK_THROWS_AS(abstract_level1(infra, {}), DisconnectedInfra);
}

TEST_CASE("level 2 aggregates capacity per pop") {
  auto hg = abstract_level2(two_pops(), {});
  REQUIRE(hg.hosts.size() == 2);
  CHECK(hg.hosts.at("popA").capacity.at("cpu") == doctest::Approx(8.0));
  CHECK(hg.hosts.at("popB").capacity.at("cpu") == doctest::Approx(8.0));
}

TEST_CASE("level 2 of a single pop has no links") {
  auto hg = abstract_level2(two_machines_one_switch(), {});
  CHECK(hg.hosts.size() == 1);
  CHECK(hg.link_delay.empty());
}

TEST_CASE("level 2 picks the fastest inter-pop path") {
  auto hg = abstract_level2(two_pops(), {});
  // machine - sA - fast - sB - machine: 0.5 + 1 + 1 + 0.5
  CHECK(hg.delay_between("popA", "popB") == doctest::Approx(3.0));
  CHECK(hg.capacity_between("popA", "popB") == doctest::Approx(40.0));
}

TEST_CASE("level 3 sums capacities and summarizes links") {
  auto summary = abstract_level3(two_pops());
  CHECK(summary.total_capacity.at("cpu") == doctest::Approx(16.0));
  CHECK(summary.link_count == 2);
  CHECK(summary.delay_min_ms == doctest::Approx(3.0));

  CHECK(abstract_level3(PhysicalInfra{}).total_capacity.empty());

  FatTreeParams params;
  params.machine_capacity = {{"cpu", 8.0}};
  auto fat = abstract_level3(gen_fat_tree(params));
  CHECK(fat.total_capacity.at("cpu") == doctest::Approx(128.0));
}

TEST_CASE("capacity conservation and delay consistency across levels") {
  Rng rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    // random infra: a few pops, machines, and a random switch fabric
    PhysicalInfra infra;
    const int pops = rng.uniform_int(2, 4);
    const int switches = rng.uniform_int(2, 5);
    for (int p = 0; p < pops; ++p)
      infra.pops.push_back({"pop" + std::to_string(p), "d0"});
    for (int s = 0; s < switches; ++s) infra.switches.push_back("sw" + std::to_string(s));
    const int machines = rng.uniform_int(pops, 8);
    for (int m = 0; m < machines; ++m) {
      std::string id = "m" + std::to_string(m);
      std::string pop = "pop" + std::to_string(m % pops);
      infra.machines.push_back(
          {id, pop, {{"cpu", static_cast<double>(rng.uniform_int(2, 8))}}});
      infra.phys_links.push_back({id, "sw" + std::to_string(rng.uniform_int(0, switches - 1)),
                                  static_cast<double>(rng.uniform_int(10, 100)),
                                  static_cast<double>(rng.uniform_int(1, 5))});
    }
    for (int s = 1; s < switches; ++s) {
      if (rng.u01() < 0.8)
        infra.phys_links.push_back({"sw" + std::to_string(s),
                                    "sw" + std::to_string(rng.uniform_int(0, s - 1)),
                                    static_cast<double>(rng.uniform_int(10, 100)),
                                    static_cast<double>(rng.uniform_int(1, 5))});
    }

    auto level1 = abstract_level1(infra, {});
    auto level2 = abstract_level2(infra, {});
    auto level3 = abstract_level3(infra);

    double sum1 = 0.0, sum2 = 0.0;
    for (const auto& [_, host] : level1.hosts) sum1 += host.capacity.at("cpu");
    for (const auto& [_, host] : level2.hosts) sum2 += host.capacity.at("cpu");
    CHECK(sum1 == level3.total_capacity.at("cpu"));
    CHECK(sum2 == level3.total_capacity.at("cpu"));

    // inter-pop delay equals the min over level-1 machine pair delays
    std::map<std::string, std::vector<std::string>> members;
    for (const auto& m : infra.machines) members[m.pop].push_back(m.id);
    for (const auto& [pa, ma] : members) {
      for (const auto& [pb, mb] : members) {
        if (pa == pb) continue;
        double expected = kInf;
        for (const auto& a : ma)
          for (const auto& b : mb)
            expected = std::min(expected, level1.delay_between(a, b));
        CHECK(level2.delay_between(pa, pb) == expected);
      }
    }
  }
}

TEST_CASE("level 1 delays match the exhaustive path oracle") {
  auto infra = two_pops();
  auto hg = abstract_level1(infra, {});
  for (const auto& a : {"a1", "a2", "b1", "b2"}) {
    for (const auto& b : {"a1", "a2", "b1", "b2"}) {
      if (a == b) continue;
      CHECK(hg.delay_between(a, b) == min_latency_oracle(infra, a, b));
    }
  }
}

TEST_CASE("malformed infra is rejected") {
  PhysicalInfra infra;
  infra.pops = {{"pop0", "d0"}};
  infra.machines = {{"m1", "pop0", {{"cpu", 4.0}}}};
  infra.phys_links = {{"m1", "nowhere", 10.0, 1.0}};
  CHECK_THROWS_AS(validate_infra(infra), std::invalid_argument);

  infra.phys_links = {{"m1", "m1", 0.0, 1.0}};  // zero bandwidth
  CHECK_THROWS_AS(validate_infra(infra), std::invalid_argument);
}
