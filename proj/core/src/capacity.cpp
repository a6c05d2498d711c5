#include "linksleep/capacity.hpp"

#include <algorithm>
#include <cstdio>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace linksleep {

CapacityEstimate critical_rate(const Topology& g,
                               const EdgeBetweennessMap& map, double alpha) {
  if (alpha <= 0.0 || alpha > 1.0) {
    throw std::invalid_argument("alpha must lie in (0, 1]");
  }
  if (g.node_count() < 2) {
    throw std::invalid_argument("critical rate needs at least 2 nodes");
  }
  auto [edge, b_max] = max_edge_betweenness(map);
  const double n = static_cast<double>(g.node_count());
  return {alpha * 2.0 * n * (n - 1.0) / b_max, b_max, edge, alpha};
}

CapacityEstimate critical_rate(const Topology& g, double alpha) {
  return critical_rate(g, edge_betweenness(g), alpha);
}

namespace {

// Unit-capacity undirected max flow (BFS augmenting paths). Each active
// edge becomes an arc pair (2k, 2k+1) that are each other's residual.
class UnitFlowNetwork {
 public:
  explicit UnitFlowNetwork(const Topology& g) : g_(g) {
    head_.resize(static_cast<size_t>(g.edge_count()) * 2);
    out_.resize(static_cast<size_t>(g.node_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!g.edge_active(e)) continue;
      int a = 2 * e;
      head_[static_cast<size_t>(a)] = g.edge(e).v;
      head_[static_cast<size_t>(a) + 1] = g.edge(e).u;
      out_[static_cast<size_t>(g.edge(e).u)].push_back(a);
      out_[static_cast<size_t>(g.edge(e).v)].push_back(a + 1);
    }
    cap_.assign(head_.size(), 1);
  }

  void reset() { std::fill(cap_.begin(), cap_.end(), 1); }

  int max_flow(NodeId s, NodeId t) {
    int flow = 0;
    std::vector<int> prev_arc(out_.size());
    while (true) {
      std::fill(prev_arc.begin(), prev_arc.end(), -1);
      std::queue<NodeId> q;
      q.push(s);
      prev_arc[static_cast<size_t>(s)] = -2;
      bool reached = false;
      while (!q.empty() && !reached) {
        NodeId u = q.front();
        q.pop();
        for (int a : out_[static_cast<size_t>(u)]) {
          if (cap_[static_cast<size_t>(a)] <= 0) continue;
          NodeId v = head_[static_cast<size_t>(a)];
          if (prev_arc[static_cast<size_t>(v)] != -1) continue;
          prev_arc[static_cast<size_t>(v)] = a;
          if (v == t) {
            reached = true;
            break;
          }
          q.push(v);
        }
      }
      if (!reached) break;
      for (NodeId v = t; v != s;) {
        int a = prev_arc[static_cast<size_t>(v)];
        --cap_[static_cast<size_t>(a)];
        ++cap_[static_cast<size_t>(a ^ 1)];
        v = head_[static_cast<size_t>(a ^ 1)];
      }
      ++flow;
    }
    return flow;
  }

  /// Source side of the min cut after max_flow(): nodes reachable in the
  /// residual network.
  std::vector<char> source_side(NodeId s) const {
    std::vector<char> seen(out_.size(), 0);
    std::queue<NodeId> q;
    q.push(s);
    seen[static_cast<size_t>(s)] = 1;
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop();
      for (int a : out_[static_cast<size_t>(u)]) {
        if (cap_[static_cast<size_t>(a)] <= 0) continue;
        NodeId v = head_[static_cast<size_t>(a)];
        if (!seen[static_cast<size_t>(v)]) {
          seen[static_cast<size_t>(v)] = 1;
          q.push(v);
        }
      }
    }
    return seen;
  }

 private:
  const Topology& g_;
  std::vector<NodeId> head_;
  std::vector<int> cap_;
  std::vector<std::vector<int>> out_;
};

}  // namespace

CutTree gomory_hu_tree(const Topology& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("cut tree requires a connected subgraph");
  }
  const int n = g.node_count();
  CutTree tree;
  tree.parent.assign(static_cast<size_t>(n), 0);
  tree.flow.assign(static_cast<size_t>(n), 0);
  UnitFlowNetwork net(g);
  for (NodeId i = 1; i < n; ++i) {
    net.reset();
    NodeId p = tree.parent[static_cast<size_t>(i)];
    tree.flow[static_cast<size_t>(i)] = net.max_flow(i, p);
    auto side = net.source_side(i);
    for (NodeId j = i + 1; j < n; ++j) {
      if (tree.parent[static_cast<size_t>(j)] == p &&
          side[static_cast<size_t>(j)]) {
        tree.parent[static_cast<size_t>(j)] = i;
      }
    }
  }
  return tree;
}

int min_cut_from_tree(const CutTree& tree, NodeId s, NodeId t) {
  if (s == t) throw std::invalid_argument("min cut needs distinct nodes");
  // Walk both nodes to the root (0), recording path minima.
  auto path_to_root = [&](NodeId x) {
    std::vector<std::pair<NodeId, int>> path;  // (node, min flow so far)
    int running = INT32_MAX;
    path.emplace_back(x, running);
    while (x != 0) {
      running = std::min(running, tree.flow[static_cast<size_t>(x)]);
      x = tree.parent[static_cast<size_t>(x)];
      path.emplace_back(x, running);
    }
    return path;
  };
  auto ps = path_to_root(s);
  auto pt = path_to_root(t);
  // Find the lowest common node.
  int best = INT32_MAX;
  for (auto [node_s, min_s] : ps) {
    for (auto [node_t, min_t] : pt) {
      if (node_s == node_t) return std::min(min_s, min_t);
    }
  }
  return best;  // unreachable on valid trees
}

double MinCutHistogram::probability(int m_c) const {
  auto it = counts.find(m_c);
  if (it == counts.end()) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(total_pairs);
}

MinCutHistogram min_cut_histogram(const Topology& g) {
  const int n = g.node_count();
  CutTree tree = gomory_hu_tree(g);
  // Tree adjacency for path-minimum traversal from every node.
  std::vector<std::vector<std::pair<NodeId, int>>> tadj(
      static_cast<size_t>(n));
  for (NodeId i = 1; i < n; ++i) {
    NodeId p = tree.parent[static_cast<size_t>(i)];
    int f = tree.flow[static_cast<size_t>(i)];
    tadj[static_cast<size_t>(i)].emplace_back(p, f);
    tadj[static_cast<size_t>(p)].emplace_back(i, f);
  }
  MinCutHistogram hist;
  hist.total_pairs =
      static_cast<long long>(n) * (n - 1) / 2;
  std::vector<int> min_on_path(static_cast<size_t>(n));
  std::vector<char> seen(static_cast<size_t>(n));
  for (NodeId s = 0; s < n; ++s) {
    std::fill(seen.begin(), seen.end(), 0);
    std::queue<NodeId> q;
    q.push(s);
    seen[static_cast<size_t>(s)] = 1;
    min_on_path[static_cast<size_t>(s)] = INT32_MAX;
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop();
      for (auto [v, f] : tadj[static_cast<size_t>(u)]) {
        if (seen[static_cast<size_t>(v)]) continue;
        seen[static_cast<size_t>(v)] = 1;
        min_on_path[static_cast<size_t>(v)] =
            std::min(min_on_path[static_cast<size_t>(u)], f);
        if (v > s) ++hist.counts[min_on_path[static_cast<size_t>(v)]];
        q.push(v);
      }
    }
  }
  return hist;
}

std::vector<std::pair<int, double>> rc_removal_curve(
    const Topology& g, const std::vector<EdgeId>& removal_sequence,
    double alpha) {
  Topology work = g;
  std::vector<std::pair<int, double>> curve;
  curve.emplace_back(0, critical_rate(work, alpha).r_c);
  for (size_t i = 0; i < removal_sequence.size(); ++i) {
    work.deactivate(removal_sequence[i]);
    if (!is_connected(work)) {
      throw std::invalid_argument("removal disconnects the graph at index " +
                                  std::to_string(i));
    }
    curve.emplace_back(static_cast<int>(i) + 1,
                       critical_rate(work, alpha).r_c);
  }
  return curve;
}

std::string rc_curve_csv(const std::vector<std::pair<int, double>>& curve) {
  std::ostringstream out;
  out << "removals,r_c\n";
  char buf[64];
  for (auto [i, rc] : curve) {
    std::snprintf(buf, sizeof buf, "%.10g", rc);
    out << i << "," << buf << "\n";
  }
  return out.str();
}

std::string min_cut_csv(const MinCutHistogram& hist, int removal_index) {
  std::ostringstream out;
  out << "removal_index,m_c,pairs,probability\n";
  char buf[64];
  for (auto [mc, count] : hist.counts) {
    std::snprintf(buf, sizeof buf, "%.10g", hist.probability(mc));
    out << removal_index << "," << mc << "," << count << "," << buf << "\n";
  }
  return out.str();
}

}  // namespace linksleep
