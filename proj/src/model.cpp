#include "vnfp/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vnfp {

namespace {

// Slack when checking sum(P) <= 1 so that masses like 3 * (1/3) pass.
constexpr double kProbEps = 1e-9;

void add(std::vector<ValidationError>& out, ValidationCode code, std::string detail) {
  out.push_back({code, std::move(detail)});
}

}  // namespace

const char* to_string(ValidationCode code) {
  switch (code) {
    case ValidationCode::DanglingReference: return "DanglingReference";
    case ValidationCode::NegativeQuantity: return "NegativeQuantity";
    case ValidationCode::ProbabilityMassExceeded: return "ProbabilityMassExceeded";
    case ValidationCode::MissingCostEntry: return "MissingCostEntry";
    case ValidationCode::SelfTraffic: return "SelfTraffic";
  }
  return "Unknown";
}

std::vector<ValidationError> validate_scenario(const Scenario& sc) {
  std::vector<ValidationError> errors;

  if (sc.resource_types.empty())
    add(errors, ValidationCode::DanglingReference, "scenario declares no resource types");
  std::map<std::string, int> rt_count;
  for (const auto& rt : sc.resource_types) {
    if (++rt_count[rt] == 2)
      add(errors, ValidationCode::DanglingReference, "duplicate resource type '" + rt + "'");
  }
  auto known_resource = [&](const std::string& rt) { return rt_count.count(rt) > 0; };

  for (const auto& [id, vnf] : sc.vnffg.vnfs) {
    if (id != vnf.id)
      add(errors, ValidationCode::DanglingReference,
          "vnf keyed as '" + id + "' carries id '" + vnf.id + "'");
    for (const auto& rt : sc.resource_types) {
      if (!vnf.demand.count(rt))
        add(errors, ValidationCode::DanglingReference,
            "vnf '" + id + "' has no demand entry for resource '" + rt + "'");
    }
    for (const auto& [rt, amount] : vnf.demand) {
      if (!known_resource(rt))
        add(errors, ValidationCode::DanglingReference,
            "vnf '" + id + "' demands unknown resource '" + rt + "'");
      if (amount < 0 || std::isnan(amount))
        add(errors, ValidationCode::NegativeQuantity,
            "vnf '" + id + "' has negative demand for '" + rt + "'");
    }
    if (vnf.proc_delay_ms < 0 || std::isnan(vnf.proc_delay_ms))
      add(errors, ValidationCode::NegativeQuantity,
          "vnf '" + id + "' has negative processing delay");
  }

  for (const auto& [pair, rate] : sc.vnffg.traffic) {
    for (const auto& endpoint : {pair.first, pair.second}) {
      if (!sc.vnffg.vnfs.count(endpoint))
        add(errors, ValidationCode::DanglingReference,
            "traffic references unknown vnf '" + endpoint + "'");
    }
    if (rate < 0 || std::isnan(rate))
      add(errors, ValidationCode::NegativeQuantity,
          "traffic (" + pair.first + ", " + pair.second + ") is negative");
    if (pair.first == pair.second && rate != 0)
      add(errors, ValidationCode::SelfTraffic,
          "vnf '" + pair.first + "' carries nonzero traffic to itself");
  }

  for (const auto& [hid, host] : sc.host_graph.hosts) {
    if (hid != host.id)
      add(errors, ValidationCode::DanglingReference,
          "host keyed as '" + hid + "' carries id '" + host.id + "'");
    for (const auto& rt : sc.resource_types) {
      auto it = host.capacity.find(rt);
      if (it == host.capacity.end() || !(it->second > 0))
        add(errors, ValidationCode::NegativeQuantity,
            "host '" + hid + "' has no positive capacity for '" + rt + "'");
    }
    for (const auto& [rt, cap] : host.capacity) {
      if (!known_resource(rt))
        add(errors, ValidationCode::DanglingReference,
            "host '" + hid + "' lists unknown resource '" + rt + "'");
    }
  }

  auto check_link_map = [&](const std::map<IdPair, double>& links, const char* what,
                            bool self_must_be_zero) {
    for (const auto& [pair, value] : links) {
      for (const auto& endpoint : {pair.first, pair.second}) {
        if (!sc.host_graph.hosts.count(endpoint))
          add(errors, ValidationCode::DanglingReference,
              std::string(what) + " references unknown host '" + endpoint + "'");
      }
      if (value < 0 || std::isnan(value))
        add(errors, ValidationCode::NegativeQuantity,
            std::string(what) + " (" + pair.first + ", " + pair.second + ") is negative");
      if (pair.first == pair.second) {
        const bool ok = self_must_be_zero ? value == 0.0 : value == kInf;
        if (!ok)
          add(errors, ValidationCode::NegativeQuantity,
              std::string(what) + " self entry for '" + pair.first +
                  "' contradicts the intra-host convention");
      }
    }
  };
  check_link_map(sc.host_graph.link_delay, "link delay", true);
  check_link_map(sc.host_graph.link_capacity, "link capacity", false);

  for (const auto& [pair, value] : sc.host_graph.cost) {
    if (!sc.host_graph.hosts.count(pair.first))
      add(errors, ValidationCode::DanglingReference,
          "cost entry references unknown host '" + pair.first + "'");
    if (!sc.vnffg.vnfs.count(pair.second))
      add(errors, ValidationCode::DanglingReference,
          "cost entry references unknown vnf '" + pair.second + "'");
    if (value < 0 || std::isnan(value))
      add(errors, ValidationCode::NegativeQuantity,
          "cost (" + pair.first + ", " + pair.second + ") is negative");
  }
  for (const auto& [hid, host] : sc.host_graph.hosts) {
    for (const auto& [vid, vnf] : sc.vnffg.vnfs) {
      if (!sc.host_graph.cost.count({hid, vid}))
        add(errors, ValidationCode::MissingCostEntry,
            "no cost entry for host '" + hid + "', vnf '" + vid + "'");
    }
  }

  for (const auto& [sid, svc] : sc.services) {
    if (sid != svc.id)
      add(errors, ValidationCode::DanglingReference,
          "service keyed as '" + sid + "' carries id '" + svc.id + "'");
    for (const auto& [vid, n] : svc.visits) {
      if (!sc.vnffg.vnfs.count(vid))
        add(errors, ValidationCode::DanglingReference,
            "service '" + sid + "' visits unknown vnf '" + vid + "'");
      if (n < 0 || std::isnan(n))
        add(errors, ValidationCode::NegativeQuantity,
            "service '" + sid + "' has negative visit count for '" + vid + "'");
    }
    std::map<std::string, double> outgoing_mass;
    for (const auto& [pair, p] : svc.transition) {
      for (const auto& endpoint : {pair.first, pair.second}) {
        if (!sc.vnffg.vnfs.count(endpoint))
          add(errors, ValidationCode::DanglingReference,
              "service '" + sid + "' transition references unknown vnf '" + endpoint + "'");
      }
      if (p < 0 || std::isnan(p))
        add(errors, ValidationCode::NegativeQuantity,
            "service '" + sid + "' transition (" + pair.first + ", " + pair.second +
                ") is negative");
      else
        outgoing_mass[pair.first] += p;
    }
    for (const auto& [vid, mass] : outgoing_mass) {
      if (mass > 1.0 + kProbEps) {
        std::ostringstream os;
        os << "service '" << sid << "' transition mass out of '" << vid << "' is " << mass;
        add(errors, ValidationCode::ProbabilityMassExceeded, os.str());
      }
    }
    if (!(svc.max_delay_ms > 0))
      add(errors, ValidationCode::NegativeQuantity,
          "service '" + sid + "' max delay must be positive");
    if (!(svc.max_cost > 0))
      add(errors, ValidationCode::NegativeQuantity,
          "service '" + sid + "' max cost must be positive");
  }

  return errors;
}

Scenario validated(Scenario scenario) {
  auto errors = validate_scenario(scenario);
  if (errors.empty()) return scenario;
  std::ostringstream os;
  os << "invalid scenario (" << errors.size() << " violation(s)):";
  for (const auto& e : errors) os << "\n  [" << to_string(e.code) << "] " << e.detail;
  throw std::invalid_argument(os.str());
}

}  // namespace vnfp
