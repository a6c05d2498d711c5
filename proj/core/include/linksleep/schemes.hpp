#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linksleep/graph.hpp"

namespace linksleep {

enum class SchemeKind { Random, SBF, LBF, Hybrid };

std::string scheme_name(SchemeKind kind);
SchemeKind scheme_from_name(const std::string& name);

struct SchemeConfig {
  SchemeKind kind;
  std::uint64_t seed = 0;  // Random / Hybrid tail
  int window_l = 20;       // Hybrid transition window
  double alpha = 1.0;      // QoS scaling of reported R values
};

/// One full powerdown run: the ordered removal sequence l_1..l_h down to a
/// spanning tree, the capacity after each removal, candidates cancelled for
/// connectivity, and (Hybrid) the detected transition index.
struct PowerdownTrace {
  double r0 = 0.0;
  std::vector<EdgeId> removals;
  std::vector<double> r_values;             // R_1..R_h
  std::vector<std::string> phases;          // per removal: lbf/sbf/rand/random
  std::vector<std::pair<int, EdgeId>> skipped;  // (1-based step, edge)
  std::optional<int> kappa;

  // Run metadata, carried into the trace file header.
  SchemeKind scheme = SchemeKind::Random;
  std::uint64_t seed = 0;
  int window_l = 20;
  double alpha = 1.0;
  int node_count = 0;
  int edge_count = 0;
  std::string network_label;

  int h() const { return static_cast<int>(removals.size()); }
  double r_final() const { return r_values.empty() ? r0 : r_values.back(); }
};

PowerdownTrace run_scheme(const Topology& g, const SchemeConfig& config);

/// Smallest kappa in [1, h] with R_kappa > R_{kappa+j} for j = 1..l-1 and
/// R_{kappa+l-1} < R_kappa / 2; candidates whose window runs past h are
/// ineligible. r_values is 1-based in spirit: r_values[0] is R_1.
std::optional<int> detect_phase_transition(const std::vector<double>& r_values,
                                           double r0, int window_l);

/// Copy of g with the first prefix_k removals of the trace applied.
Topology replay_trace(const Topology& g, const PowerdownTrace& trace,
                      int prefix_k);

/// Trace file: '#' metadata lines (scheme, seed, window, alpha, r0, n, m,
/// network, kappa), then step,edge_id,u,v,r_value,phase rows.
std::string trace_csv(const PowerdownTrace& trace, const Topology& g);
PowerdownTrace parse_trace_csv(const std::string& text);

}  // namespace linksleep
