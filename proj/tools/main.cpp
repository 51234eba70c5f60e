#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "vnfp/experiment.hpp"
#include "vnfp/scenario_gen.hpp"
#include "vnfp/serialization.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
}

void print_human_report(const vnfp::RunOutcome& outcome) {
  std::cout << "algorithm: " << outcome.label;
  if (!outcome.param.empty()) std::cout << " (" << outcome.param << ")";
  std::cout << "\n";
  if (outcome.result.feasible()) {
    std::cout << "feasible: yes\n";
    std::cout << "total cost: " << vnfp::format_double(outcome.result.metrics.total_cost)
              << "\n";
    std::cout << "total delay: "
              << vnfp::format_double(outcome.result.metrics.total_delay_ms) << " ms\n";
    for (const auto& [svc, delay] : outcome.result.metrics.service_delay_ms)
      std::cout << "  service " << svc << ": " << vnfp::format_double(delay) << " ms\n";
    std::cout << "max utilization: "
              << vnfp::format_double(outcome.result.metrics.max_utilization) << "\n";
    std::cout << "placement:\n";
    for (const auto& [vnf, host] : outcome.result.placement->assignment)
      std::cout << "  " << vnf << " -> " << host << "\n";
  } else {
    std::cout << "feasible: no (" << outcome.result.error << ")\n";
    for (const auto& v : outcome.result.violations)
      std::cout << "  " << v.describe() << "\n";
  }
  std::cout << "runtime: " << vnfp::format_double(outcome.runtime_ms) << " ms\n";
}

struct GaFlags {
  int pool = 20;
  int generations = 200;
  double crossover = 0.8;
  double mutation = 0.05;
  std::string objective = "cost";

  void attach(CLI::App* cmd) {
    cmd->add_option("--ga-pool", pool, "GA pool size K");
    cmd->add_option("--ga-generations", generations, "GA generations G");
    cmd->add_option("--ga-crossover", crossover, "GA crossover rate");
    cmd->add_option("--ga-mutation", mutation, "GA mutation rate");
    cmd->add_option("--ga-objective", objective, "GA objective: cost|delay")
        ->check(CLI::IsMember({"cost", "delay"}));
  }

  vnfp::GaConfig config(std::uint64_t seed) const {
    vnfp::GaConfig cfg;
    cfg.pool_size = pool;
    cfg.generations = generations;
    cfg.crossover_rate = crossover;
    cfg.mutation_rate = mutation;
    cfg.objective = *vnfp::objective_from_string(objective);
    cfg.rng_seed = seed;
    return cfg;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"VNF forwarding-graph placement over abstracted host graphs"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string output;
  std::string format = "csv";
  app.add_option("--seed", seed, "RNG seed for every randomized step")->capture_default_str();
  app.add_option("--output", output, "write results to this path instead of stdout");
  app.add_option("--format", format, "structured output format")
      ->check(CLI::IsMember({"csv", "json-lines"}));

  // generate
  auto* generate = app.add_subcommand("generate", "emit a fat-tree scenario file");
  int fat_tree_k = 4;
  int services = 3;
  int vnf_min = 5, vnf_max = 10;
  int level = 1;
  int domains = 1;
  std::string infra_out;
  generate->add_option("--fat-tree-k", fat_tree_k, "fat-tree pod parameter (even)")
      ->capture_default_str();
  generate->add_option("--services", services, "number of services")->capture_default_str();
  generate->add_option("--vnf-min", vnf_min, "minimum VNFs per service")->capture_default_str();
  generate->add_option("--vnf-max", vnf_max, "maximum VNFs per service")->capture_default_str();
  generate->add_option("--level", level, "abstraction level (1 or 2)")->capture_default_str();
  generate->add_option("--domains", domains, "administrative domains over the pods")
      ->capture_default_str();
  generate->add_option("--infra-out", infra_out, "also write the physical infra to this path");

  // validate
  auto* validate = app.add_subcommand("validate", "check a scenario file");
  std::string validate_file;
  validate->add_option("file", validate_file, "scenario file")->required();

  // run
  auto* run = app.add_subcommand("run", "place one scenario with one algorithm");
  std::string run_file;
  std::string algo_name = "cluster";
  int clusters = 1;
  double interdomain_weight = 10.0;
  double foreign_cost_factor = 1.0;
  std::string local_domain;
  std::string objective_name = "cost";
  GaFlags run_ga;
  run->add_option("file", run_file, "scenario file")->required();
  run->add_option("--algo", algo_name,
                  "cluster|min-distance|min-latency|ga|brute-force")
      ->check(CLI::IsMember({"cluster", "min-distance", "min-latency", "ga", "brute-force"}))
      ->capture_default_str();
  run->add_option("--clusters", clusters, "cluster count k")->capture_default_str();
  run->add_option("--interdomain-weight", interdomain_weight,
                  "delay multiplier for inter-domain links (>= 1)")
      ->capture_default_str();
  run->add_option("--foreign-cost-factor", foreign_cost_factor,
                  "cost multiplier for foreign-domain hosts (>= 1)")
      ->capture_default_str();
  run->add_option("--local-domain", local_domain, "domain id counted as local");
  run->add_option("--objective", objective_name, "brute-force objective: cost|delay|weighted")
      ->check(CLI::IsMember({"cost", "delay", "weighted"}));
  run_ga.attach(run);
  bool run_no_timing = false;
  run->add_flag("--no-timing", run_no_timing, "report runtime as 0 for reproducible output");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "cluster-count sweep plus GA benchmark rows");
  std::string sweep_file;
  int k_min = 1, k_max = 7;
  bool no_ga = false;
  bool sweep_no_timing = false;
  double sweep_interdomain = 10.0;
  double sweep_foreign = 1.0;
  std::string sweep_local_domain;
  GaFlags sweep_ga;
  sweep_cmd->add_option("file", sweep_file, "scenario file")->required();
  sweep_cmd->add_option("--k-min", k_min, "first cluster count")->capture_default_str();
  sweep_cmd->add_option("--k-max", k_max, "last cluster count")->capture_default_str();
  sweep_cmd->add_flag("--no-ga", no_ga, "skip the GA benchmark rows");
  sweep_cmd->add_flag("--no-timing", sweep_no_timing,
                      "report runtime as 0 for reproducible output");
  sweep_cmd->add_option("--interdomain-weight", sweep_interdomain,
                        "delay multiplier for inter-domain links (>= 1)");
  sweep_cmd->add_option("--foreign-cost-factor", sweep_foreign,
                        "cost multiplier for foreign-domain hosts (>= 1)");
  sweep_cmd->add_option("--local-domain", sweep_local_domain, "domain id counted as local");
  sweep_ga.attach(sweep_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      vnfp::ScenarioGenParams params;
      params.fat_tree.k = fat_tree_k;
      params.fat_tree.domains = domains;
      params.services.count = services;
      params.services.vnf_min = vnf_min;
      params.services.vnf_max = vnf_max;
      params.abstraction_level = level;
      auto scenario = vnfp::build_fat_tree_scenario(params, seed);
      write_output(vnfp::scenario_to_json(scenario), output);
      if (!infra_out.empty()) vnfp::save_infra(vnfp::gen_fat_tree(params.fat_tree), infra_out);
      return kExitOk;
    }

    if (validate->parsed()) {
      auto scenario = vnfp::load_scenario(validate_file);
      auto errors = vnfp::validate_scenario(scenario);
      if (errors.empty()) {
        std::cout << "OK: " << scenario.vnffg.vnfs.size() << " vnfs, "
                  << scenario.host_graph.hosts.size() << " hosts, "
                  << scenario.services.size() << " services\n";
        return kExitOk;
      }
      for (const auto& e : errors)
        std::cerr << "[" << vnfp::to_string(e.code) << "] " << e.detail << "\n";
      return kExitInputError;
    }

    if (run->parsed()) {
      auto scenario = vnfp::validated(vnfp::load_scenario(run_file));
      vnfp::RunOptions options;
      options.algo = *vnfp::algo_from_string(algo_name);
      options.cluster.k = clusters;
      options.cluster.interdomain_weight = interdomain_weight;
      options.cluster.foreign_cost_factor = foreign_cost_factor;
      options.cluster.local_domain = local_domain;
      options.ga = run_ga.config(seed);
      if (auto obj = vnfp::objective_from_string(objective_name))
        options.brute_objective = *obj;
      options.timing = !run_no_timing;
      auto outcome = vnfp::run_algorithm(scenario, options);
      if (format == "json-lines")
        write_output(vnfp::outcome_to_json(outcome) + "\n", output);
      else
        print_human_report(outcome);
      return outcome.result.feasible() ? kExitOk : kExitInfeasible;
    }

    if (sweep_cmd->parsed()) {
      auto scenario = vnfp::validated(vnfp::load_scenario(sweep_file));
      vnfp::SweepOptions options;
      options.k_min = k_min;
      options.k_max = k_max;
      options.include_ga = !no_ga;
      options.cluster.interdomain_weight = sweep_interdomain;
      options.cluster.foreign_cost_factor = sweep_foreign;
      options.cluster.local_domain = sweep_local_domain;
      options.ga = sweep_ga.config(seed);
      options.timing = !sweep_no_timing;
      auto rows = vnfp::sweep(scenario, options);
      if (format == "json-lines") {
        std::string lines;
        for (const auto& row : rows) lines += vnfp::outcome_to_json(row) + "\n";
        write_output(lines, output);
      } else {
        write_output(vnfp::sweep_to_csv(rows), output);
      }
      for (const auto& row : rows)
        if (!row.result.feasible()) return kExitInfeasible;
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
