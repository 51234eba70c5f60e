#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "vnfp/model.hpp"
#include "vnfp/result.hpp"

namespace vnfp {

struct KTooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct MergeStep {
  std::string a;  // representative (smallest member id) of each merged cluster
  std::string b;
  double linkage = 0.0;  // inter-cluster weight at merge time
};

struct Clustering {
  std::map<std::string, int> cluster_of;  // node id -> cluster index in [0, k)
  int k = 0;
  std::vector<MergeStep> merge_trace;  // n - k entries

  std::vector<std::vector<std::string>> members() const;
};

struct ClusterParams {
  int k = 1;
  double interdomain_weight = 10.0;   // >= 1, scales inter-domain link delays
  double foreign_cost_factor = 1.0;   // >= 1, scales foreign-domain costs
  std::string local_domain;           // empty: every host counts as local
};

/// Agglomerative clustering of the VNFFG: repeatedly joins the two clusters
/// connected by the highest-traffic edge (per-edge weight sums both
/// directions) until k clusters remain.
Clustering cluster_vnffg(const Vnffg& g, int k);

/// Same procedure on the host graph, joining the two clusters connected by
/// the lowest-delay link; links crossing domains have their delay scaled by
/// params.interdomain_weight first.
Clustering cluster_hosts(const HostGraph& hg, int k, const ClusterParams& params);

/// Pairs VNF clusters with host clusters by rank: demand-heaviest VNF
/// cluster to capacity-richest host cluster, resources ordered dominant
/// first, ties by smallest member id.
std::map<int, int> match_clusters(const Clustering& vnf_clusters,
                                  const Clustering& host_clusters, const Scenario& sc);

/// Cost-greedy assignment honoring the cluster matching: VNFs in descending
/// processing-delay order, each to the cheapest in-cluster host with spare
/// capacity, load-balance tie-break; falls back to any fitting host when the
/// matched cluster is full.
PlacementResult assign(const Clustering& vnf_clusters, const Clustering& host_clusters,
                       const std::map<int, int>& matching, const Scenario& sc,
                       const ClusterParams& params);

/// The full cluster-based pipeline: cluster both graphs, match, assign.
PlacementResult place_clustered(const Scenario& sc, const ClusterParams& params);

}  // namespace vnfp
