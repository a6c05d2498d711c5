#include "linksleep/packet_sim.hpp"

#include <cstdio>
#include <deque>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

namespace linksleep {

namespace {

std::vector<std::vector<int>> all_pairs_bfs(const Topology& g) {
  const int n = g.node_count();
  std::vector<std::vector<int>> dist(
      static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  for (NodeId s = 0; s < n; ++s) {
    auto& d = dist[static_cast<size_t>(s)];
    d[static_cast<size_t>(s)] = 0;
    std::queue<NodeId> q;
    q.push(s);
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop();
      for (auto [v, e] : g.adjacency(u)) {
        if (!g.edge_active(e) || d[static_cast<size_t>(v)] >= 0) continue;
        d[static_cast<size_t>(v)] = d[static_cast<size_t>(u)] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

struct Packet {
  NodeId dst;
  int hops;
  int dist_at_injection;
};

}  // namespace

SimStats simulate(const Topology& g, const SimConfig& config) {
  if (config.rate_r < 1) throw std::invalid_argument("rate must be >= 1");
  if (config.steps <= config.warmup_steps || config.warmup_steps < 0) {
    throw std::invalid_argument("need steps > warmup_steps >= 0");
  }
  if (!is_connected(g)) {
    throw std::invalid_argument("simulation requires a connected subgraph");
  }
  const int n = g.node_count();
  if (n < 2) throw std::invalid_argument("need at least 2 nodes");

  auto dist = all_pairs_bfs(g);
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> pick_node(0, n - 1);

  // Directed interface queues: arc 2e is u->v of edge e, arc 2e+1 is v->u.
  std::vector<std::deque<Packet>> queues(
      static_cast<size_t>(g.edge_count()) * 2);

  // Uniform choice among next-hop arcs that lie on a shortest path.
  auto choose_arc = [&](NodeId at, NodeId dst) -> int {
    int want = dist[static_cast<size_t>(at)][static_cast<size_t>(dst)] - 1;
    int count = 0;
    int chosen = -1;
    for (auto [v, e] : g.adjacency(at)) {
      if (!g.edge_active(e)) continue;
      if (dist[static_cast<size_t>(v)][static_cast<size_t>(dst)] != want)
        continue;
      ++count;
      std::uniform_int_distribution<int> coin(1, count);
      if (coin(rng) == 1) {
        chosen = 2 * e + (g.edge(e).u == at ? 0 : 1);
      }
    }
    return chosen;  // >= 0 on connected graphs with at != dst
  };

  SimStats stats;
  long long in_flight = 0;
  long long in_flight_at_warmup = 0;
  std::vector<std::pair<int, Packet>> moved;  // (arrival node, packet)

  for (int step = 0; step < config.steps; ++step) {
    for (int k = 0; k < config.rate_r; ++k) {
      NodeId src = pick_node(rng);
      NodeId dst = pick_node(rng);
      while (dst == src) dst = pick_node(rng);
      Packet p{dst, 0,
               dist[static_cast<size_t>(src)][static_cast<size_t>(dst)]};
      queues[static_cast<size_t>(choose_arc(src, dst))].push_back(p);
      ++stats.created;
      ++in_flight;
    }

    // Each interface forwards one packet; arrivals re-enqueue after all
    // interfaces acted so nothing hops twice in one step.
    moved.clear();
    for (size_t a = 0; a < queues.size(); ++a) {
      if (queues[a].empty()) continue;
      Packet p = queues[a].front();
      queues[a].pop_front();
      ++p.hops;
      NodeId arrival = (a % 2 == 0) ? g.edge(static_cast<EdgeId>(a / 2)).v
                                    : g.edge(static_cast<EdgeId>(a / 2)).u;
      moved.emplace_back(arrival, p);
    }
    for (auto& [node, p] : moved) {
      if (node == p.dst) {
        ++stats.delivered;
        --in_flight;
        if (p.hops != p.dist_at_injection) ++stats.hop_violations;
      } else {
        queues[static_cast<size_t>(choose_arc(node, p.dst))].push_back(p);
      }
    }

    for (const auto& q : queues) {
      stats.max_queue =
          std::max(stats.max_queue, static_cast<long long>(q.size()));
    }
    if (step + 1 == config.warmup_steps) in_flight_at_warmup = in_flight;
    if (in_flight > config.max_in_flight) {
      throw std::runtime_error("in-flight packet cap exceeded");
    }
  }

  stats.in_flight_at_end = in_flight;
  const double measured_steps =
      static_cast<double>(config.steps - config.warmup_steps);
  double growth = static_cast<double>(in_flight - in_flight_at_warmup) /
                  measured_steps / static_cast<double>(config.rate_r);
  stats.order_parameter = growth > 0.0 ? growth : 0.0;
  return stats;
}

double locate_transition(const Topology& g, const SimConfig& config_template,
                         int r_low, int r_high) {
  if (r_low >= r_high) throw std::invalid_argument("need r_low < r_high");
  constexpr double kThreshold = 0.05;
  auto order_at = [&](int r) {
    SimConfig c = config_template;
    c.rate_r = r;
    return simulate(g, c).order_parameter;
  };
  double lo_val = order_at(r_low);
  double hi_val = order_at(r_high);
  if (lo_val >= kThreshold || hi_val < kThreshold) {
    throw std::invalid_argument(
        "no free-flow/congested sign change in bracket");
  }
  int lo = r_low, hi = r_high;
  while (hi - lo > 1) {
    int mid = lo + (hi - lo) / 2;
    if (order_at(mid) < kThreshold) lo = mid;
    else hi = mid;
  }
  return (static_cast<double>(lo) + static_cast<double>(hi)) / 2.0;
}

std::string sim_csv_header() {
  return "R,seed,created,delivered,order_parameter,max_queue\n";
}

std::string sim_csv_row(const SimConfig& config, const SimStats& stats) {
  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", stats.order_parameter);
  out << config.rate_r << "," << config.seed << "," << stats.created << ","
      << stats.delivered << "," << buf << "," << stats.max_queue << "\n";
  return out.str();
}

}  // namespace linksleep
