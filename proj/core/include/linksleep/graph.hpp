#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace linksleep {

using NodeId = int;
using EdgeId = int;

struct Edge {
  NodeId u;
  NodeId v;

  bool operator==(const Edge&) const = default;
};

/// Undirected simple graph with stable edge ids and a per-edge power mask.
/// Edges are canonically ordered by (min endpoint, max endpoint) at
/// construction so that edge ids are reproducible from any source
/// (generator, file, hand-built list). Powering a link down flips its mask
/// bit; the edge list itself never changes, so traces replay and reverse
/// exactly.
class Topology {
 public:
  Topology(int node_count, std::vector<Edge> edges);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int active_edge_count() const { return active_count_; }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool edge_active(EdgeId e) const;
  const std::vector<std::uint8_t>& active_mask() const { return active_; }

  void deactivate(EdgeId e);
  void reactivate(EdgeId e);

  /// Neighbors of a node over *all* edges, as (neighbor, edge id) pairs.
  /// Callers skip inactive entries via edge_active().
  const std::vector<std::pair<NodeId, EdgeId>>& adjacency(NodeId n) const {
    return adj_[static_cast<size_t>(n)];
  }

  bool operator==(const Topology&) const = default;

 private:
  void check_edge_id(EdgeId e) const;

  int node_count_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> active_;
  int active_count_;
  std::vector<std::vector<std::pair<NodeId, EdgeId>>> adj_;
};

/// True iff the active subgraph has a single component spanning all nodes.
bool is_connected(const Topology& g);

/// True iff the active subgraph is a spanning tree (N-1 active edges and
/// connected).
bool spanning_tree_reached(const Topology& g);

/// Active edges whose removal would disconnect the active subgraph.
/// The graph need not be connected; bridges are per-component.
std::vector<EdgeId> find_bridges(const Topology& g);

/// Maximum number of links a powerdown scheme can remove: M_active - N + 1.
int max_removable(const Topology& g);

std::vector<int> active_degrees(const Topology& g);

}  // namespace linksleep
