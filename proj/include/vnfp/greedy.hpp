#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vnfp/model.hpp"
#include "vnfp/result.hpp"

namespace vnfp {

/// All-pairs minimum-delay routing over the virtual-link graph: path delay,
/// the bottleneck bandwidth along that path, and its hop count. Unreachable
/// pairs read as (inf, 0, 0); the diagonal as (0, inf, 0).
class PathTable {
 public:
  explicit PathTable(const HostGraph& hg);

  int host_count() const { return static_cast<int>(host_ids_.size()); }
  const std::vector<std::string>& host_ids() const { return host_ids_; }
  int host_index(const std::string& id) const;

  double delay(int from, int to) const { return delay_[from][to]; }
  double bandwidth(int from, int to) const { return bandwidth_[from][to]; }
  int hops(int from, int to) const { return hops_[from][to]; }

  /// Virtual links along the min-delay path, in order; empty for the
  /// diagonal and for unreachable pairs.
  const std::vector<std::pair<int, int>>& path_links(int from, int to) const {
    return paths_[from][to];
  }

  double delay_between(const std::string& from, const std::string& to) const;
  double bandwidth_between(const std::string& from, const std::string& to) const;
  int hops_between(const std::string& from, const std::string& to) const;

 private:
  std::vector<std::string> host_ids_;
  std::vector<std::vector<double>> delay_;
  std::vector<std::vector<double>> bandwidth_;
  std::vector<std::vector<int>> hops_;
  std::vector<std::vector<std::vector<std::pair<int, int>>>> paths_;
};

PathTable build_path_table(const HostGraph& hg);

/// Edge-driven sweep in descending traffic order, placing each edge's
/// endpoints on the host pair with the smallest path delay that honors
/// capacities, residual bandwidth, and the per-service delay budgets.
PlacementResult place_min_distance(const Scenario& sc);

/// Same sweep, but candidates are ranked by the resulting accumulated
/// service delay (processing plus propagation) instead of pair distance.
PlacementResult place_min_latency(const Scenario& sc);

}  // namespace vnfp
