#include "linksleep/schemes.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "linksleep/betweenness.hpp"
#include "linksleep/capacity.hpp"

namespace linksleep {

std::string scheme_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::Random: return "random";
    case SchemeKind::SBF: return "sbf";
    case SchemeKind::LBF: return "lbf";
    case SchemeKind::Hybrid: return "hybrid";
  }
  throw std::invalid_argument("unknown scheme kind");
}

SchemeKind scheme_from_name(const std::string& name) {
  if (name == "random") return SchemeKind::Random;
  if (name == "sbf") return SchemeKind::SBF;
  if (name == "lbf") return SchemeKind::LBF;
  if (name == "hybrid") return SchemeKind::Hybrid;
  throw std::invalid_argument("unknown scheme '" + name + "'");
}

std::optional<int> detect_phase_transition(const std::vector<double>& r_values,
                                           double /*r0*/, int window_l) {
  if (window_l < 2) throw std::invalid_argument("window must be >= 2");
  const int h = static_cast<int>(r_values.size());
  for (int kappa = 1; kappa + window_l - 1 <= h; ++kappa) {
    const double rk = r_values[static_cast<size_t>(kappa - 1)];
    bool ok = true;
    for (int j = 1; j < window_l && ok; ++j) {
      if (!(rk > r_values[static_cast<size_t>(kappa + j - 1)])) ok = false;
    }
    if (ok && r_values[static_cast<size_t>(kappa + window_l - 2)] < rk / 2.0) {
      return kappa;
    }
  }
  return std::nullopt;
}

namespace {

std::vector<char> bridge_mask(const Topology& g) {
  std::vector<char> mask(static_cast<size_t>(g.edge_count()), 0);
  for (EdgeId e : find_bridges(g)) mask[static_cast<size_t>(e)] = 1;
  return mask;
}

// Uniform draw among active non-bridge edges; bridges hit on the way are
// recorded as cancelled candidates for this step.
EdgeId pick_random(const Topology& g, const std::vector<char>& bridges,
                   std::mt19937_64& rng, int step,
                   std::vector<std::pair<int, EdgeId>>& skipped) {
  std::vector<EdgeId> pool;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.edge_active(e)) pool.push_back(e);
  }
  while (!pool.empty()) {
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    size_t i = pick(rng);
    EdgeId e = pool[i];
    if (!bridges[static_cast<size_t>(e)]) return e;
    skipped.emplace_back(step, e);
    pool.erase(pool.begin() + static_cast<long>(i));
  }
  throw std::logic_error("no removable edge although above spanning tree");
}

// Betweenness-ordered pick: smallest (SBF) or largest (LBF) first, edge id
// breaking ties; bridges are cancelled and recorded.
EdgeId pick_by_betweenness(const Topology& g, const EdgeBetweennessMap& map,
                           const std::vector<char>& bridges, bool largest,
                           int step,
                           std::vector<std::pair<int, EdgeId>>& skipped) {
  std::vector<EdgeId> order = map.active_edges;
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    if (map.value(a) != map.value(b)) {
      return largest ? map.value(a) > map.value(b)
                     : map.value(a) < map.value(b);
    }
    return a < b;
  });
  for (EdgeId e : order) {
    if (!bridges[static_cast<size_t>(e)]) return e;
    skipped.emplace_back(step, e);
  }
  throw std::logic_error("no removable edge although above spanning tree");
}

}  // namespace

PowerdownTrace run_scheme(const Topology& g, const SchemeConfig& config) {
  if (!is_connected(g)) {
    throw std::invalid_argument("powerdown requires a connected topology");
  }
  if (config.window_l < 2) {
    throw std::invalid_argument("window must be >= 2");
  }

  Topology work = g;
  EdgeBetweennessMap betw = edge_betweenness(work);

  PowerdownTrace trace;
  trace.scheme = config.kind;
  trace.seed = config.seed;
  trace.window_l = config.window_l;
  trace.alpha = config.alpha;
  trace.node_count = g.node_count();
  trace.edge_count = g.edge_count();
  trace.r0 = critical_rate(work, betw, config.alpha).r_c;

  std::mt19937_64 rng(config.seed);
  bool lbf_phase = config.kind == SchemeKind::Hybrid;

  while (work.active_edge_count() > work.node_count() - 1) {
    const int step = trace.h() + 1;
    auto bridges = bridge_mask(work);
    EdgeId chosen;
    const char* phase;
    switch (config.kind) {
      case SchemeKind::Random:
        chosen = pick_random(work, bridges, rng, step, trace.skipped);
        phase = "rand";
        break;
      case SchemeKind::SBF:
        chosen = pick_by_betweenness(work, betw, bridges, false, step,
                                     trace.skipped);
        phase = "sbf";
        break;
      case SchemeKind::LBF:
        chosen = pick_by_betweenness(work, betw, bridges, true, step,
                                     trace.skipped);
        phase = "lbf";
        break;
      case SchemeKind::Hybrid:
        if (lbf_phase) {
          chosen = pick_by_betweenness(work, betw, bridges, true, step,
                                       trace.skipped);
          phase = "lbf";
        } else {
          chosen = pick_random(work, bridges, rng, step, trace.skipped);
          phase = "random";
        }
        break;
    }

    work.deactivate(chosen);
    betw = edge_betweenness(work);
    trace.removals.push_back(chosen);
    trace.r_values.push_back(critical_rate(work, betw, config.alpha).r_c);
    trace.phases.emplace_back(phase);

    // The transition criteria look l-1 steps past kappa, so the LBF phase
    // runs provisionally: once the window confirms kappa, the removals
    // after it are rolled back and the tail is redone with Random.
    if (lbf_phase) {
      auto kappa = detect_phase_transition(trace.r_values, trace.r0,
                                           config.window_l);
      if (kappa) {
        trace.kappa = kappa;
        while (trace.h() > *kappa) {
          work.reactivate(trace.removals.back());
          trace.removals.pop_back();
          trace.r_values.pop_back();
          trace.phases.pop_back();
        }
        std::erase_if(trace.skipped,
                      [&](const auto& s) { return s.first > *kappa; });
        betw = edge_betweenness(work);
        lbf_phase = false;
      }
    }
  }
  return trace;
}

Topology replay_trace(const Topology& g, const PowerdownTrace& trace,
                      int prefix_k) {
  if (prefix_k < 0 || prefix_k > trace.h()) {
    throw std::out_of_range("prefix outside [0, h]");
  }
  if (trace.edge_count != g.edge_count() ||
      trace.node_count != g.node_count()) {
    throw std::invalid_argument("trace does not match topology size");
  }
  Topology work = g;
  for (int i = 0; i < prefix_k; ++i) {
    EdgeId e = trace.removals[static_cast<size_t>(i)];
    if (e < 0 || e >= g.edge_count()) {
      throw std::invalid_argument("trace edge id out of range");
    }
    work.deactivate(e);
  }
  return work;
}

std::string trace_csv(const PowerdownTrace& trace, const Topology& g) {
  std::ostringstream out;
  char buf[64];
  out << "# scheme=" << scheme_name(trace.scheme) << "\n";
  out << "# seed=" << trace.seed << "\n";
  out << "# window=" << trace.window_l << "\n";
  std::snprintf(buf, sizeof buf, "%.17g", trace.alpha);
  out << "# alpha=" << buf << "\n";
  std::snprintf(buf, sizeof buf, "%.17g", trace.r0);
  out << "# r0=" << buf << "\n";
  out << "# n=" << trace.node_count << "\n";
  out << "# m=" << trace.edge_count << "\n";
  if (!trace.network_label.empty()) {
    out << "# network=" << trace.network_label << "\n";
  }
  if (trace.kappa) out << "# kappa=" << *trace.kappa << "\n";
  out << "# skipped=" << trace.skipped.size() << "\n";
  out << "step,edge_id,u,v,r_value,phase\n";
  for (int i = 0; i < trace.h(); ++i) {
    EdgeId e = trace.removals[static_cast<size_t>(i)];
    std::snprintf(buf, sizeof buf, "%.17g",
                  trace.r_values[static_cast<size_t>(i)]);
    out << (i + 1) << "," << e << "," << g.edge(e).u << "," << g.edge(e).v
        << "," << buf << "," << trace.phases[static_cast<size_t>(i)] << "\n";
  }
  return out.str();
}

PowerdownTrace parse_trace_csv(const std::string& text) {
  PowerdownTrace trace;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(2, eq - 2);
      std::string val = line.substr(eq + 1);
      if (key == "scheme") trace.scheme = scheme_from_name(val);
      else if (key == "seed") trace.seed = std::stoull(val);
      else if (key == "window") trace.window_l = std::stoi(val);
      else if (key == "alpha") trace.alpha = std::stod(val);
      else if (key == "r0") trace.r0 = std::stod(val);
      else if (key == "n") trace.node_count = std::stoi(val);
      else if (key == "m") trace.edge_count = std::stoi(val);
      else if (key == "network") trace.network_label = val;
      else if (key == "kappa") trace.kappa = std::stoi(val);
      continue;
    }
    if (!header_seen) {
      header_seen = true;  // column header row
      continue;
    }
    std::istringstream ls(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != 6) {
      throw std::invalid_argument("malformed trace row: " + line);
    }
    trace.removals.push_back(std::stoi(fields[1]));
    trace.r_values.push_back(std::stod(fields[4]));
    trace.phases.push_back(fields[5]);
  }
  if (!header_seen) throw std::invalid_argument("trace file without header");
  return trace;
}

}  // namespace linksleep
