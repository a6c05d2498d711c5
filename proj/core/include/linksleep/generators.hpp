#pragma once

#include <cstdint>

#include "linksleep/graph.hpp"

namespace linksleep {

enum class Family { ER, BA, Hier };

/// Generator request. Seeds feed std::mt19937_64 directly; the same spec
/// always yields the same edge list.
struct GenSpec {
  Family family;
  int node_count;
  int edge_count;
  std::uint64_t seed;
};

/// Erdos-Renyi G(n, M): exactly edge_count edges drawn uniformly among all
/// node pairs, redrawn whole until connected (capped at 1000 attempts).
Topology generate_er(const GenSpec& spec);

/// Barabasi-Albert preferential attachment, grown with m = 2 links per new
/// node (m = 1 when edge_count is too small for that), then topped up with
/// preferentially chosen extra links until edge_count is exact.
Topology generate_ba(const GenSpec& spec);

/// Synthetic two-tier hierarchical ISP-like fixture: a core clique, an
/// aggregation layer dual-homed to the core, and an access layer dual-homed
/// to the aggregation layer. Stands in for measured router-level topologies
/// when the real dataset is not on disk. 353 nodes.
Topology generate_hierarchical(std::uint64_t seed);

Topology generate(const GenSpec& spec);

}  // namespace linksleep
