#include "linksleep/generators.hpp"

#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace linksleep {

namespace {

void check_counts(const GenSpec& spec) {
  const long long n = spec.node_count;
  const long long m = spec.edge_count;
  if (n < 2) throw std::invalid_argument("need at least 2 nodes");
  if (m < n - 1) {
    throw std::invalid_argument("edge_count " + std::to_string(m) +
                                " below n-1; connected graph infeasible");
  }
  if (m > n * (n - 1) / 2) {
    throw std::invalid_argument("edge_count exceeds simple-graph maximum");
  }
}

}  // namespace

Topology generate_er(const GenSpec& spec) {
  check_counts(spec);
  const int n = spec.node_count;
  const long long m = spec.edge_count;
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> pick(0, n - 1);

  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::set<std::pair<int, int>> chosen;
    while (static_cast<long long>(chosen.size()) < m) {
      int u = pick(rng);
      int v = pick(rng);
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      chosen.insert({u, v});
    }
    std::vector<Edge> edges;
    edges.reserve(chosen.size());
    for (auto [u, v] : chosen) edges.push_back({u, v});
    Topology g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("ER generation: no connected draw in 1000 tries");
}

Topology generate_ba(const GenSpec& spec) {
  check_counts(spec);
  const int n = spec.node_count;
  const int m_total = spec.edge_count;
  std::mt19937_64 rng(spec.seed);

  // Growth attachment count: 2 when the budget allows, else 1 (pure tree
  // growth plus top-up).
  const int m_attach = (m_total >= 2 * n - 3 && n >= 3) ? 2 : 1;

  std::set<std::pair<int, int>> chosen;
  // Each endpoint appearance in `stubs` gives a node one unit of attachment
  // probability; sampling uniformly from it is preferential attachment.
  std::vector<int> stubs;
  auto add_edge = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    if (!chosen.insert({u, v}).second) return false;
    stubs.push_back(u);
    stubs.push_back(v);
    return true;
  };

  int seed_nodes;
  if (m_attach == 2) {
    seed_nodes = 3;
    add_edge(0, 1);
    add_edge(1, 2);
    add_edge(0, 2);
  } else {
    seed_nodes = 2;
    add_edge(0, 1);
  }

  for (int node = seed_nodes; node < n; ++node) {
    std::set<int> targets;
    while (static_cast<int>(targets.size()) < m_attach) {
      std::uniform_int_distribution<size_t> pick(0, stubs.size() - 1);
      targets.insert(stubs[pick(rng)]);
    }
    for (int t : targets) add_edge(node, t);
  }

  // Top up to the exact edge count with preferentially chosen extra links
  // between existing non-adjacent pairs.
  while (static_cast<int>(chosen.size()) < m_total) {
    std::uniform_int_distribution<size_t> pick(0, stubs.size() - 1);
    int u = stubs[pick(rng)];
    int v = stubs[pick(rng)];
    if (u == v) continue;
    add_edge(u, v);
  }

  std::vector<Edge> edges;
  edges.reserve(chosen.size());
  for (auto [u, v] : chosen) edges.push_back({u, v});
  Topology g(n, std::move(edges));
  if (!is_connected(g)) {
    throw std::runtime_error("BA generation produced a disconnected graph");
  }
  return g;
}

Topology generate_hierarchical(std::uint64_t seed) {
  // 8 core routers in a clique, 40 aggregation routers each dual-homed to
  // an adjacent core pair, 305 access routers each dual-homed to two
  // aggregation routers of one region. 353 nodes, 718 edges. Core links
  // concentrate the inter-region transit; the dual-homing links exist for
  // redundancy only.
  constexpr int kCores = 8;
  constexpr int kAggs = 40;
  constexpr int kAccess = 305;
  std::mt19937_64 rng(seed);

  std::vector<Edge> edges;
  for (int i = 0; i < kCores; ++i) {
    for (int j = i + 1; j < kCores; ++j) edges.push_back({i, j});
  }
  // Region r owns cores (r, r+1) and kAggs/kCores aggregation routers.
  constexpr int kAggsPerRegion = kAggs / kCores;
  for (int a = 0; a < kAggs; ++a) {
    int node = kCores + a;
    int region = a % kCores;
    edges.push_back({node, region});
    edges.push_back({node, (region + 1) % kCores});
  }
  // Access routers stay within one region so inter-region traffic must
  // transit the core ring.
  std::uniform_int_distribution<int> pick_region(0, kCores - 1);
  std::uniform_int_distribution<int> pick_slot(0, kAggsPerRegion - 1);
  for (int x = 0; x < kAccess; ++x) {
    int node = kCores + kAggs + x;
    int region = pick_region(rng);
    int s1 = pick_slot(rng);
    int s2 = s1;
    while (s2 == s1) s2 = pick_slot(rng);
    edges.push_back({node, kCores + s1 * kCores + region});
    edges.push_back({node, kCores + s2 * kCores + region});
  }
  return Topology(kCores + kAggs + kAccess, std::move(edges));
}

Topology generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::ER:
      return generate_er(spec);
    case Family::BA:
      return generate_ba(spec);
    case Family::Hier:
      return generate_hierarchical(spec.seed);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace linksleep
