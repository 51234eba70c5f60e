#pragma once

#include <string>

#include "vnfp/infrastructure.hpp"
#include "vnfp/model.hpp"

namespace vnfp {

// Scenario documents are JSON with top-level keys `resource_types`, `vnfs`,
// `traffic`, `hosts`, `links`, `costs`, `services`. Infinite costs are
// encoded as null. PhysicalInfra documents use `machines`, `pops`,
// `switches`, `phys_links`. See README for the field reference.

std::string scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const std::string& text);

std::string infra_to_json(const PhysicalInfra& infra);
PhysicalInfra infra_from_json(const std::string& text);

Scenario load_scenario(const std::string& path);     // throws std::runtime_error on I/O
void save_scenario(const Scenario& scenario, const std::string& path);

PhysicalInfra load_infra(const std::string& path);
void save_infra(const PhysicalInfra& infra, const std::string& path);

}  // namespace vnfp
