#pragma once

#include <string>

#include "linksleep/graph.hpp"

namespace linksleep {

/// What the Rocketfuel cch ingestion dropped or merged at each step, so
/// node/edge counts can be reconciled against published figures.
struct IngestReport {
  int records = 0;            // router lines parsed
  int external_skipped = 0;   // external-node lines and {-uid} neighbor refs
  int duplicate_links = 0;    // bidirectional listings merged
  int self_loops = 0;
  int nodes_outside_giant = 0;
  int final_nodes = 0;
  int final_edges = 0;
};

/// Ingests a Rocketfuel router-level cch document: keeps internal routers
/// and their <uid> neighbor references, drops external references, merges
/// bidirectional duplicates, keeps the largest connected component, and
/// re-indexes node ids contiguously (numeric order of original uids).
Topology ingest_rocketfuel(const std::string& text,
                           IngestReport* report = nullptr);

}  // namespace linksleep
