#include "linksleep/graph.hpp"

#include <algorithm>
#include <set>
#include <stack>
#include <stdexcept>
#include <string>

namespace linksleep {

Topology::Topology(int node_count, std::vector<Edge> edges)
    : node_count_(node_count) {
  if (node_count < 1) {
    throw std::invalid_argument("topology needs at least one node");
  }
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= node_count || e.v < 0 || e.v >= node_count) {
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at node " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw std::invalid_argument("duplicate edge (" +
                                  std::to_string(edges[i].u) + "," +
                                  std::to_string(edges[i].v) + ")");
    }
  }
  edges_ = std::move(edges);
  active_.assign(edges_.size(), 1);
  active_count_ = static_cast<int>(edges_.size());
  adj_.resize(static_cast<size_t>(node_count));
  for (EdgeId e = 0; e < edge_count(); ++e) {
    adj_[static_cast<size_t>(edges_[static_cast<size_t>(e)].u)].emplace_back(
        edges_[static_cast<size_t>(e)].v, e);
    adj_[static_cast<size_t>(edges_[static_cast<size_t>(e)].v)].emplace_back(
        edges_[static_cast<size_t>(e)].u, e);
  }
}

void Topology::check_edge_id(EdgeId e) const {
  if (e < 0 || e >= edge_count()) {
    throw std::out_of_range("unknown edge id " + std::to_string(e));
  }
}

bool Topology::edge_active(EdgeId e) const {
  check_edge_id(e);
  return active_[static_cast<size_t>(e)] != 0;
}

void Topology::deactivate(EdgeId e) {
  check_edge_id(e);
  if (!active_[static_cast<size_t>(e)]) {
    throw std::logic_error("edge " + std::to_string(e) + " already inactive");
  }
  active_[static_cast<size_t>(e)] = 0;
  --active_count_;
}

void Topology::reactivate(EdgeId e) {
  check_edge_id(e);
  if (active_[static_cast<size_t>(e)]) {
    throw std::logic_error("edge " + std::to_string(e) + " already active");
  }
  active_[static_cast<size_t>(e)] = 1;
  ++active_count_;
}

bool is_connected(const Topology& g) {
  const int n = g.node_count();
  if (n == 1) return true;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::stack<NodeId> todo;
  todo.push(0);
  seen[0] = 1;
  int count = 1;
  while (!todo.empty()) {
    NodeId u = todo.top();
    todo.pop();
    for (auto [v, e] : g.adjacency(u)) {
      if (!g.edge_active(e) || seen[static_cast<size_t>(v)]) continue;
      seen[static_cast<size_t>(v)] = 1;
      ++count;
      todo.push(v);
    }
  }
  return count == n;
}

bool spanning_tree_reached(const Topology& g) {
  return g.active_edge_count() == g.node_count() - 1 && is_connected(g);
}

int max_removable(const Topology& g) {
  return g.active_edge_count() - g.node_count() + 1;
}

std::vector<int> active_degrees(const Topology& g) {
  std::vector<int> deg(static_cast<size_t>(g.node_count()), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!g.edge_active(e)) continue;
    ++deg[static_cast<size_t>(g.edge(e).u)];
    ++deg[static_cast<size_t>(g.edge(e).v)];
  }
  return deg;
}

// Iterative Tarjan bridge finding over the active subgraph.
std::vector<EdgeId> find_bridges(const Topology& g) {
  const int n = g.node_count();
  std::vector<int> disc(static_cast<size_t>(n), -1);
  std::vector<int> low(static_cast<size_t>(n), 0);
  std::vector<EdgeId> bridges;
  int timer = 0;

  struct Frame {
    NodeId node;
    EdgeId in_edge;  // edge used to enter node, -1 at roots
    size_t next;     // next adjacency index to explore
  };
  std::vector<Frame> stack;

  for (NodeId root = 0; root < n; ++root) {
    if (disc[static_cast<size_t>(root)] != -1) continue;
    stack.push_back({root, -1, 0});
    disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& adj = g.adjacency(f.node);
      if (f.next < adj.size()) {
        auto [v, e] = adj[f.next++];
        if (!g.edge_active(e) || e == f.in_edge) continue;
        if (disc[static_cast<size_t>(v)] == -1) {
          disc[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] =
              timer++;
          stack.push_back({v, e, 0});
        } else {
          low[static_cast<size_t>(f.node)] = std::min(
              low[static_cast<size_t>(f.node)], disc[static_cast<size_t>(v)]);
        }
      } else {
        NodeId child = f.node;
        EdgeId via = f.in_edge;
        stack.pop_back();
        if (!stack.empty()) {
          NodeId parent = stack.back().node;
          low[static_cast<size_t>(parent)] =
              std::min(low[static_cast<size_t>(parent)],
                       low[static_cast<size_t>(child)]);
          if (low[static_cast<size_t>(child)] >
              disc[static_cast<size_t>(parent)]) {
            bridges.push_back(via);
          }
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

}  // namespace linksleep
