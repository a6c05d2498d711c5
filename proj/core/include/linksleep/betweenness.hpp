#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linksleep/graph.hpp"

namespace linksleep {

/// Exact edge betweenness of the active subgraph under the ordered-pair
/// convention: B(e) sums lambda_e(i,j)/lambda(i,j) over all ordered pairs
/// i != j, so every unordered pair counts twice. This is the convention
/// under which R_c = 2N(N-1)/B_max holds with per-direction interface
/// capacity 1.
struct EdgeBetweennessMap {
  std::vector<double> values;       // indexed by EdgeId; -1 for inactive
  std::vector<EdgeId> active_edges; // ascending ids

  double value(EdgeId e) const { return values[static_cast<size_t>(e)]; }
};

/// Brandes accumulation with a fixed source order (ascending node id), so
/// results are bit-identical across runs.
EdgeBetweennessMap edge_betweenness(const Topology& g);

/// Max value; ties broken by smallest edge id.
std::pair<EdgeId, double> max_edge_betweenness(const EdgeBetweennessMap& map);

/// Step CDF over sorted distinct values, ending at probability 1.
std::vector<std::pair<double, double>> betweenness_cdf(
    const EdgeBetweennessMap& map);

/// CSV export: edge_id,u,v,betweenness for active edges.
std::string betweenness_csv(const Topology& g, const EdgeBetweennessMap& map);

}  // namespace linksleep
