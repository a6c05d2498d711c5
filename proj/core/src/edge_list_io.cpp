#include "linksleep/edge_list_io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace linksleep {

Topology parse_edge_list(const std::string& text, ParseOptions opts) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<std::pair<long long, long long>> raw;
  while (std::getline(in, line)) {
    ++line_no;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u >> v)) {
      throw std::invalid_argument("malformed edge at line " +
                                  std::to_string(line_no));
    }
    std::string extra;
    if (ls >> extra) {
      throw std::invalid_argument("trailing tokens at line " +
                                  std::to_string(line_no));
    }
    if (u < 0 || v < 0) {
      throw std::invalid_argument("negative node id at line " +
                                  std::to_string(line_no));
    }
    if (u == v) {
      if (opts.strict) {
        throw std::invalid_argument("self-loop at line " +
                                    std::to_string(line_no));
      }
      continue;
    }
    raw.emplace_back(u, v);
  }
  if (raw.empty()) throw std::invalid_argument("empty edge list");

  std::map<long long, int> relabel;
  for (auto [u, v] : raw) {
    relabel.emplace(u, 0);
    relabel.emplace(v, 0);
  }
  int next = 0;
  for (auto& [label, id] : relabel) id = next++;

  std::set<std::pair<int, int>> seen;
  std::vector<Edge> edges;
  for (size_t i = 0; i < raw.size(); ++i) {
    int u = relabel[raw[i].first];
    int v = relabel[raw[i].second];
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      if (opts.strict) {
        throw std::invalid_argument("duplicate edge (" +
                                    std::to_string(raw[i].first) + "," +
                                    std::to_string(raw[i].second) + ")");
      }
      continue;
    }
    edges.push_back({u, v});
  }
  return Topology(next, std::move(edges));
}

std::string write_edge_list(const Topology& g) {
  std::ostringstream out;
  out << "# nodes=" << g.node_count() << " edges=" << g.edge_count() << "\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << g.edge(e).u << " " << g.edge(e).v << "\n";
  }
  return out.str();
}

}  // namespace linksleep
