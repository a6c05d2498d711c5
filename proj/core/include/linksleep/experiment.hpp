#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linksleep/graph.hpp"
#include "linksleep/schemes.hpp"

namespace linksleep {

/// One experiment run fully determined by its manifest: a network source,
/// a set of schemes and seeds, and output settings. Re-running the same
/// manifest reproduces byte-identical files.
struct ExperimentManifest {
  std::string network;  // "er:N:M", "ba:N:M", "hier", or "file:PATH"
  std::string label;    // network label used in filenames and summary rows
  std::uint64_t network_seed = 1;
  std::vector<SchemeKind> schemes;
  std::vector<std::uint64_t> seeds;
  double alpha = 1.0;
  int window_l = 20;
  int grid_points = 100;
  std::string out_dir = ".";
  bool gnuplot = false;
};

/// Key = value lines, '#' comments. Keys: network, label, network_seed,
/// schemes (comma list), seeds (comma list), alpha, window, grid, out,
/// gnuplot.
ExperimentManifest parse_manifest(const std::string& text);

Topology load_network(const std::string& network_spec,
                      std::uint64_t network_seed);

/// Runs the full (scheme x seed) matrix, writing per-run trace, R_c-curve
/// and active-links-curve CSVs plus an aggregated energy summary. Returns
/// the written paths.
std::vector<std::string> run_experiment(const ExperimentManifest& manifest);

/// Table-style summary over traces: per (network, scheme) mean and stddev
/// of the savings ratio. Traces must agree on M within a network label.
std::string summary_csv(
    const std::vector<std::pair<std::string, PowerdownTrace>>& traces);

/// Write-to-temp-then-rename, so concurrent experiment cells never expose
/// partial files.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace linksleep
