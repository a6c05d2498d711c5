#include "linksleep/rocketfuel.hpp"

#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace linksleep {

// cch line shape:
//   uid @loc [+] [bb] (num_neigh) [&ext] -> <nuid-1> ... {-euid} ... =name rn
//   -euid =externaladdress rn
// We only need the leading uid and the <...> internal neighbor references.
Topology ingest_rocketfuel(const std::string& text, IngestReport* report) {
  IngestReport rep;
  std::istringstream in(text);
  std::string line;
  std::set<long long> internal_nodes;
  std::set<std::pair<long long, long long>> links;

  while (std::getline(in, line)) {
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long uid;
    if (!(ls >> uid)) {
      throw std::invalid_argument("unparseable cch record: " + line);
    }
    if (uid < 0) {
      ++rep.external_skipped;
      continue;
    }
    ++rep.records;
    internal_nodes.insert(uid);
    std::string tok;
    while (ls >> tok) {
      if (tok.size() >= 3 && tok.front() == '<' && tok.back() == '>') {
        long long nbr = std::stoll(tok.substr(1, tok.size() - 2));
        if (nbr < 0) {
          ++rep.external_skipped;
          continue;
        }
        internal_nodes.insert(nbr);
        if (nbr == uid) {
          ++rep.self_loops;
          continue;
        }
        auto key = std::minmax(uid, nbr);
        if (!links.insert({key.first, key.second}).second) {
          ++rep.duplicate_links;
        }
      } else if (!tok.empty() && tok.front() == '{') {
        ++rep.external_skipped;
      }
    }
  }
  if (links.empty()) {
    throw std::invalid_argument(
        "no internal links after filtering; empty graph");
  }

  // Largest connected component over the filtered link set.
  std::map<long long, std::vector<long long>> adj;
  for (auto [u, v] : links) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::set<long long> best_comp;
  std::set<long long> visited;
  for (auto& [start, _] : adj) {
    if (visited.count(start)) continue;
    std::set<long long> comp;
    std::queue<long long> q;
    q.push(start);
    visited.insert(start);
    comp.insert(start);
    while (!q.empty()) {
      long long u = q.front();
      q.pop();
      for (long long v : adj[u]) {
        if (visited.insert(v).second) {
          comp.insert(v);
          q.push(v);
        }
      }
    }
    if (comp.size() > best_comp.size()) best_comp = std::move(comp);
  }
  rep.nodes_outside_giant =
      static_cast<int>(internal_nodes.size() - best_comp.size());

  std::map<long long, int> relabel;
  int next = 0;
  for (long long n : best_comp) relabel[n] = next++;
  std::vector<Edge> edges;
  for (auto [u, v] : links) {
    if (!best_comp.count(u) || !best_comp.count(v)) continue;
    edges.push_back({relabel[u], relabel[v]});
  }
  Topology g(next, std::move(edges));
  rep.final_nodes = g.node_count();
  rep.final_edges = g.edge_count();
  if (report) *report = rep;
  return g;
}

}  // namespace linksleep
