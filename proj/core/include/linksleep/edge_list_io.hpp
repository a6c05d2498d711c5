#pragma once

#include <string>

#include "linksleep/graph.hpp"

namespace linksleep {

struct ParseOptions {
  // Strict mode rejects self-loops and duplicate undirected edges; relaxed
  // mode drops them silently.
  bool strict = true;
};

/// Parses a plain edge-list document: '#' comment lines, one "u v" pair per
/// line, whitespace-separated non-negative decimal node labels. Labels are
/// re-indexed to contiguous 0..N-1 preserving numeric order.
Topology parse_edge_list(const std::string& text, ParseOptions opts = {});

/// Canonical edge-list text: edges sorted by (min endpoint, max endpoint),
/// one per line. parse(write(g)) reproduces g's edge set and ids.
std::string write_edge_list(const Topology& g);

}  // namespace linksleep
