#include "linksleep/betweenness.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace linksleep {

EdgeBetweennessMap edge_betweenness(const Topology& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument(
        "edge betweenness requires a connected active subgraph");
  }
  const int n = g.node_count();
  EdgeBetweennessMap map;
  map.values.assign(static_cast<size_t>(g.edge_count()), -1.0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.edge_active(e)) {
      map.values[static_cast<size_t>(e)] = 0.0;
      map.active_edges.push_back(e);
    }
  }

  std::vector<int> dist(static_cast<size_t>(n));
  std::vector<double> sigma(static_cast<size_t>(n));
  std::vector<double> delta(static_cast<size_t>(n));
  std::vector<NodeId> order;  // BFS visit order
  order.reserve(static_cast<size_t>(n));

  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();
    dist[static_cast<size_t>(s)] = 0;
    sigma[static_cast<size_t>(s)] = 1.0;
    order.push_back(s);
    for (size_t head = 0; head < order.size(); ++head) {
      NodeId u = order[head];
      for (auto [v, e] : g.adjacency(u)) {
        if (!g.edge_active(e)) continue;
        if (dist[static_cast<size_t>(v)] < 0) {
          dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
          order.push_back(v);
        }
        if (dist[static_cast<size_t>(v)] == dist[static_cast<size_t>(u)] + 1) {
          sigma[static_cast<size_t>(v)] += sigma[static_cast<size_t>(u)];
        }
      }
    }
    // Dependency accumulation in reverse BFS order. Edge (u,v) with v one
    // layer deeper receives sigma_u/sigma_v * (1 + delta_v); endpoint pairs
    // are included, matching the edge (not vertex) betweenness definition.
    for (size_t i = order.size(); i-- > 1;) {
      NodeId v = order[i];
      for (auto [u, e] : g.adjacency(v)) {
        if (!g.edge_active(e)) continue;
        if (dist[static_cast<size_t>(u)] + 1 != dist[static_cast<size_t>(v)])
          continue;
        double c = sigma[static_cast<size_t>(u)] /
                   sigma[static_cast<size_t>(v)] *
                   (1.0 + delta[static_cast<size_t>(v)]);
        map.values[static_cast<size_t>(e)] += c;
        delta[static_cast<size_t>(u)] += c;
      }
    }
  }
  return map;
}

std::pair<EdgeId, double> max_edge_betweenness(const EdgeBetweennessMap& map) {
  if (map.active_edges.empty()) {
    throw std::invalid_argument("empty betweenness map");
  }
  EdgeId best = map.active_edges.front();
  for (EdgeId e : map.active_edges) {
    if (map.value(e) > map.value(best)) best = e;
  }
  return {best, map.value(best)};
}

std::vector<std::pair<double, double>> betweenness_cdf(
    const EdgeBetweennessMap& map) {
  if (map.active_edges.empty()) {
    throw std::invalid_argument("empty betweenness map");
  }
  std::vector<double> vals;
  vals.reserve(map.active_edges.size());
  for (EdgeId e : map.active_edges) vals.push_back(map.value(e));
  std::sort(vals.begin(), vals.end());
  std::vector<std::pair<double, double>> cdf;
  const double total = static_cast<double>(vals.size());
  size_t i = 0;
  while (i < vals.size()) {
    size_t j = i;
    while (j < vals.size() && vals[j] == vals[i]) ++j;
    cdf.emplace_back(vals[i], static_cast<double>(j) / total);
    i = j;
  }
  return cdf;
}

std::string betweenness_csv(const Topology& g, const EdgeBetweennessMap& map) {
  std::ostringstream out;
  out << "edge_id,u,v,betweenness\n";
  char buf[64];
  for (EdgeId e : map.active_edges) {
    std::snprintf(buf, sizeof buf, "%.10g", map.value(e));
    out << e << "," << g.edge(e).u << "," << g.edge(e).v << "," << buf
        << "\n";
  }
  return out.str();
}

}  // namespace linksleep
