#include "vnfp/serialization.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace vnfp {

namespace {

using nlohmann::json;

json money_to_json(double value) {
  if (value == kInf) return nullptr;  // JSON has no infinity
  return value;
}

double money_from_json(const json& j) {
  if (j.is_null()) return kInf;
  return j.get<double>();
}

json pair_map_to_json(const std::map<IdPair, double>& m, const char* a, const char* b,
                      const char* value_key) {
  json out = json::array();
  for (const auto& [pair, value] : m) {
    json entry;
    entry[a] = pair.first;
    entry[b] = pair.second;
    entry[value_key] = money_to_json(value);
    out.push_back(std::move(entry));
  }
  return out;
}

std::map<IdPair, double> pair_map_from_json(const json& j, const char* a, const char* b,
                                            const char* value_key) {
  std::map<IdPair, double> out;
  for (const auto& entry : j)
    out[{entry.at(a).get<std::string>(), entry.at(b).get<std::string>()}] =
        money_from_json(entry.at(value_key));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

std::string scenario_to_json(const Scenario& sc) {
  json j;
  j["resource_types"] = sc.resource_types;

  json vnfs = json::array();
  for (const auto& [id, vnf] : sc.vnffg.vnfs) {
    json v;
    v["id"] = id;
    v["demand"] = vnf.demand;
    v["proc_delay_ms"] = vnf.proc_delay_ms;
    vnfs.push_back(std::move(v));
  }
  j["vnfs"] = std::move(vnfs);
  j["traffic"] = pair_map_to_json(sc.vnffg.traffic, "from", "to", "rate_mbps");

  json hosts = json::array();
  for (const auto& [id, host] : sc.host_graph.hosts) {
    json h;
    h["id"] = id;
    h["capacity"] = host.capacity;
    h["domain"] = host.domain;
    h["operator"] = host.op;
    hosts.push_back(std::move(h));
  }
  j["hosts"] = std::move(hosts);

  json links = json::array();
  for (const auto& [pair, bw] : sc.host_graph.link_capacity) {
    json l;
    l["from"] = pair.first;
    l["to"] = pair.second;
    l["bandwidth_mbps"] = money_to_json(bw);
    auto it = sc.host_graph.link_delay.find(pair);
    l["delay_ms"] = it == sc.host_graph.link_delay.end() ? json(nullptr) : json(it->second);
    links.push_back(std::move(l));
  }
  // delay-only entries (no capacity listed for the pair)
  for (const auto& [pair, delay] : sc.host_graph.link_delay) {
    if (sc.host_graph.link_capacity.count(pair)) continue;
    json l;
    l["from"] = pair.first;
    l["to"] = pair.second;
    l["delay_ms"] = delay;
    links.push_back(std::move(l));
  }
  j["links"] = std::move(links);
  j["costs"] = pair_map_to_json(sc.host_graph.cost, "host", "vnf", "cost");

  json services = json::array();
  for (const auto& [id, svc] : sc.services) {
    json s;
    s["id"] = id;
    s["visits"] = svc.visits;
    s["transitions"] = pair_map_to_json(svc.transition, "from", "to", "p");
    s["max_delay_ms"] = svc.max_delay_ms;
    s["max_cost"] = svc.max_cost;
    services.push_back(std::move(s));
  }
  j["services"] = std::move(services);

  return j.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
  json j = json::parse(text);
  Scenario sc;
  sc.resource_types = j.at("resource_types").get<std::vector<std::string>>();

  for (const auto& v : j.at("vnfs")) {
    Vnf vnf;
    vnf.id = v.at("id").get<std::string>();
    vnf.demand = v.at("demand").get<std::map<std::string, double>>();
    vnf.proc_delay_ms = v.at("proc_delay_ms").get<double>();
    sc.vnffg.vnfs.emplace(vnf.id, std::move(vnf));
  }
  sc.vnffg.traffic = pair_map_from_json(j.at("traffic"), "from", "to", "rate_mbps");

  for (const auto& h : j.at("hosts")) {
    Host host;
    host.id = h.at("id").get<std::string>();
    host.capacity = h.at("capacity").get<std::map<std::string, double>>();
    host.domain = h.at("domain").get<std::string>();
    host.op = h.at("operator").get<std::string>();
    sc.host_graph.hosts.emplace(host.id, std::move(host));
  }
  for (const auto& l : j.at("links")) {
    IdPair pair{l.at("from").get<std::string>(), l.at("to").get<std::string>()};
    if (l.contains("bandwidth_mbps") && !l.at("bandwidth_mbps").is_null())
      sc.host_graph.link_capacity[pair] = money_from_json(l.at("bandwidth_mbps"));
    else if (l.contains("bandwidth_mbps"))
      sc.host_graph.link_capacity[pair] = kInf;
    if (l.contains("delay_ms") && !l.at("delay_ms").is_null())
      sc.host_graph.link_delay[pair] = l.at("delay_ms").get<double>();
  }
  sc.host_graph.cost = pair_map_from_json(j.at("costs"), "host", "vnf", "cost");

  for (const auto& s : j.at("services")) {
    ServiceSpec svc;
    svc.id = s.at("id").get<std::string>();
    svc.visits = s.at("visits").get<std::map<std::string, double>>();
    svc.transition = pair_map_from_json(s.at("transitions"), "from", "to", "p");
    svc.max_delay_ms = s.at("max_delay_ms").get<double>();
    svc.max_cost = s.at("max_cost").get<double>();
    sc.services.emplace(svc.id, std::move(svc));
  }
  return sc;
}

std::string infra_to_json(const PhysicalInfra& infra) {
  json j;
  json machines = json::array();
  for (const auto& m : infra.machines) {
    json e;
    e["id"] = m.id;
    e["pop"] = m.pop;
    e["capacity"] = m.capacity;
    machines.push_back(std::move(e));
  }
  j["machines"] = std::move(machines);

  json pops = json::array();
  for (const auto& p : infra.pops) {
    json e;
    e["id"] = p.id;
    e["domain"] = p.domain;
    pops.push_back(std::move(e));
  }
  j["pops"] = std::move(pops);
  j["switches"] = infra.switches;

  json links = json::array();
  for (const auto& l : infra.phys_links) {
    json e;
    e["a"] = l.a;
    e["b"] = l.b;
    e["bandwidth_mbps"] = l.bandwidth_mbps;
    e["latency_ms"] = l.latency_ms;
    links.push_back(std::move(e));
  }
  j["phys_links"] = std::move(links);
  return j.dump(2) + "\n";
}

PhysicalInfra infra_from_json(const std::string& text) {
  json j = json::parse(text);
  PhysicalInfra infra;
  for (const auto& m : j.at("machines"))
    infra.machines.push_back({m.at("id").get<std::string>(), m.at("pop").get<std::string>(),
                              m.at("capacity").get<std::map<std::string, double>>()});
  for (const auto& p : j.at("pops"))
    infra.pops.push_back({p.at("id").get<std::string>(), p.at("domain").get<std::string>()});
  infra.switches = j.at("switches").get<std::vector<std::string>>();
  for (const auto& l : j.at("phys_links"))
    infra.phys_links.push_back({l.at("a").get<std::string>(), l.at("b").get<std::string>(),
                                l.at("bandwidth_mbps").get<double>(),
                                l.at("latency_ms").get<double>()});
  return infra;
}

Scenario load_scenario(const std::string& path) {
  try {
    return scenario_from_json(read_file(path));
  } catch (const json::exception& e) {
    throw std::runtime_error("failed to parse scenario '" + path + "': " + e.what());
  }
}

void save_scenario(const Scenario& scenario, const std::string& path) {
  write_file(path, scenario_to_json(scenario));
}

PhysicalInfra load_infra(const std::string& path) {
  try {
    return infra_from_json(read_file(path));
  } catch (const json::exception& e) {
    throw std::runtime_error("failed to parse infra '" + path + "': " + e.what());
  }
}

void save_infra(const PhysicalInfra& infra, const std::string& path) {
  write_file(path, infra_to_json(infra));
}

}  // namespace vnfp
