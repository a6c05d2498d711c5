#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "linksleep/betweenness.hpp"
#include "linksleep/graph.hpp"

namespace linksleep {

/// Critical packet-generating rate of the active subgraph:
/// R_c = alpha * 2N(N-1) / B_max.
struct CapacityEstimate {
  double r_c;
  double b_max;
  EdgeId bottleneck_edge;
  double qos_alpha;
};

CapacityEstimate critical_rate(const Topology& g, double alpha = 1.0);

/// Same, reusing an already-computed betweenness map for g's current state.
CapacityEstimate critical_rate(const Topology& g,
                               const EdgeBetweennessMap& map,
                               double alpha = 1.0);

/// Gusfield-style cut-equivalent tree over the active subgraph with unit
/// edge capacities: parent[i] and the min-cut value flow[i] toward it, for
/// i in 1..N-1 (node 0 is the root). Path minima give all-pairs min cuts.
struct CutTree {
  std::vector<NodeId> parent;
  std::vector<int> flow;
};

CutTree gomory_hu_tree(const Topology& g);

/// Min s-t cut value from the tree: minimum flow label on the tree path.
int min_cut_from_tree(const CutTree& tree, NodeId s, NodeId t);

/// Distribution of the pairwise minimum cut m_c over all unordered node
/// pairs of the active subgraph.
struct MinCutHistogram {
  std::map<int, long long> counts;
  long long total_pairs;

  double probability(int m_c) const;
};

MinCutHistogram min_cut_histogram(const Topology& g);

/// R_c after each cumulative removal: (0, R_0), (1, R_1), ... Throws if a
/// prefix disconnects the graph (message carries the offending index).
std::vector<std::pair<int, double>> rc_removal_curve(
    const Topology& g, const std::vector<EdgeId>& removal_sequence,
    double alpha = 1.0);

std::string rc_curve_csv(const std::vector<std::pair<int, double>>& curve);
std::string min_cut_csv(const MinCutHistogram& hist, int removal_index);

}  // namespace linksleep
