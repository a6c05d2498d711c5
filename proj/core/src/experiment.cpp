#include "linksleep/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "linksleep/capacity.hpp"
#include "linksleep/edge_list_io.hpp"
#include "linksleep/energy.hpp"
#include "linksleep/generators.hpp"

namespace linksleep {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) {
    // trim
    size_t a = part.find_first_not_of(" \t");
    size_t b = part.find_last_not_of(" \t");
    parts.push_back(a == std::string::npos ? ""
                                           : part.substr(a, b - a + 1));
  }
  return parts;
}

}  // namespace

ExperimentManifest parse_manifest(const std::string& text) {
  ExperimentManifest m;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("manifest line " + std::to_string(line_no) +
                                  ": expected key = value");
    }
    auto key_parts = split(line.substr(0, eq), ' ');
    std::string key;
    for (auto& p : key_parts) key += p;
    std::string val = split(line.substr(eq + 1), '\n')[0];
    size_t a = val.find_first_not_of(" \t");
    size_t b = val.find_last_not_of(" \t\r");
    val = a == std::string::npos ? "" : val.substr(a, b - a + 1);

    if (key == "network") m.network = val;
    else if (key == "label") m.label = val;
    else if (key == "network_seed") m.network_seed = std::stoull(val);
    else if (key == "alpha") m.alpha = std::stod(val);
    else if (key == "window") m.window_l = std::stoi(val);
    else if (key == "grid") m.grid_points = std::stoi(val);
    else if (key == "out") m.out_dir = val;
    else if (key == "gnuplot") m.gnuplot = (val == "true" || val == "1");
    else if (key == "schemes") {
      for (auto& s : split(val, ',')) m.schemes.push_back(scheme_from_name(s));
    } else if (key == "seeds") {
      for (auto& s : split(val, ',')) m.seeds.push_back(std::stoull(s));
    } else {
      throw std::invalid_argument("unknown manifest key '" + key + "'");
    }
  }
  if (m.network.empty()) throw std::invalid_argument("manifest lacks network");
  if (m.schemes.empty()) throw std::invalid_argument("manifest lacks schemes");
  if (m.seeds.empty()) m.seeds.push_back(1);
  if (m.label.empty()) m.label = m.network;
  return m;
}

Topology load_network(const std::string& network_spec,
                      std::uint64_t network_seed) {
  auto parts = split(network_spec, ':');
  if (parts[0] == "file") {
    if (parts.size() != 2) {
      throw std::invalid_argument("network file spec needs file:PATH");
    }
    return parse_edge_list(read_file(parts[1]));
  }
  if (parts[0] == "hier") return generate_hierarchical(network_seed);
  if (parts[0] == "er" || parts[0] == "ba") {
    if (parts.size() != 3) {
      throw std::invalid_argument("generator spec needs family:N:M");
    }
    GenSpec spec{parts[0] == "er" ? Family::ER : Family::BA,
                 std::stoi(parts[1]), std::stoi(parts[2]), network_seed};
    return generate(spec);
  }
  throw std::invalid_argument("unknown network spec '" + network_spec + "'");
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
  }
  fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string summary_csv(
    const std::vector<std::pair<std::string, PowerdownTrace>>& traces) {
  // (network, scheme) -> savings ratios
  std::map<std::pair<std::string, std::string>, std::vector<double>> groups;
  std::map<std::string, int> network_m;
  for (const auto& [network, trace] : traces) {
    auto [it, inserted] = network_m.emplace(network, trace.edge_count);
    if (!inserted && it->second != trace.edge_count) {
      throw std::invalid_argument("traces for network '" + network +
                                  "' disagree on edge count");
    }
    EnergyReport report = energy_savings(trace, trace.edge_count, 2);
    groups[{network, scheme_name(trace.scheme)}].push_back(
        report.savings_ratio);
  }
  std::ostringstream out;
  out << "network,scheme,runs,mean_savings_pct,stddev_pct\n";
  char b1[64], b2[64];
  for (const auto& [key, vals] : groups) {
    double mean = 0.0;
    for (double v : vals) mean += v;
    mean /= static_cast<double>(vals.size());
    double var = 0.0;
    for (double v : vals) var += (v - mean) * (v - mean);
    var = vals.size() > 1 ? var / static_cast<double>(vals.size() - 1) : 0.0;
    std::snprintf(b1, sizeof b1, "%.6g", mean * 100.0);
    std::snprintf(b2, sizeof b2, "%.6g", std::sqrt(var) * 100.0);
    out << key.first << "," << key.second << "," << vals.size() << "," << b1
        << "," << b2 << "\n";
  }
  return out.str();
}

std::vector<std::string> run_experiment(const ExperimentManifest& manifest) {
  Topology g = load_network(manifest.network, manifest.network_seed);
  std::vector<std::string> written;
  std::vector<std::pair<std::string, PowerdownTrace>> traces;
  namespace fs = std::filesystem;

  for (SchemeKind kind : manifest.schemes) {
    for (std::uint64_t seed : manifest.seeds) {
      SchemeConfig cfg{kind, seed, manifest.window_l, manifest.alpha};
      PowerdownTrace trace = run_scheme(g, cfg);
      trace.network_label = manifest.label;
      std::string stem = manifest.label + "_" + scheme_name(kind) + "_s" +
                         std::to_string(seed);
      std::string trace_path =
          (fs::path(manifest.out_dir) / ("trace_" + stem + ".csv")).string();
      write_file_atomic(trace_path, trace_csv(trace, g));
      written.push_back(trace_path);

      std::vector<std::pair<int, double>> curve;
      curve.emplace_back(0, trace.r0);
      for (int i = 0; i < trace.h(); ++i) {
        curve.emplace_back(i + 1, trace.r_values[static_cast<size_t>(i)]);
      }
      std::string curve_path =
          (fs::path(manifest.out_dir) / ("rc_curve_" + stem + ".csv"))
              .string();
      write_file_atomic(curve_path, rc_curve_csv(curve));
      written.push_back(curve_path);

      if (trace.h() > 0 &&
          std::floor(trace.r0) > std::floor(trace.r_final())) {
        auto links_curve =
            active_links_curve(trace, g.edge_count(), manifest.grid_points);
        std::string links_path =
            (fs::path(manifest.out_dir) / ("active_links_" + stem + ".csv"))
                .string();
        write_file_atomic(links_path, curve_csv(links_curve));
        written.push_back(links_path);
      }
      traces.emplace_back(manifest.label, std::move(trace));
    }
  }

  std::string summary_path =
      (fs::path(manifest.out_dir) / ("energy_summary_" + manifest.label +
                                     ".csv"))
          .string();
  write_file_atomic(summary_path, summary_csv(traces));
  written.push_back(summary_path);

  std::ostringstream per_run;
  per_run << energy_csv_header();
  for (const auto& [network, trace] : traces) {
    EnergyReport report = energy_savings(trace, trace.edge_count, 2);
    per_run << energy_csv_row(network, trace, report);
  }
  std::string energy_path =
      (fs::path(manifest.out_dir) / ("energy_runs_" + manifest.label +
                                     ".csv"))
          .string();
  write_file_atomic(energy_path, per_run.str());
  written.push_back(energy_path);

  if (manifest.gnuplot) {
    std::ostringstream gp;
    gp << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "set xlabel 'links removed'\n"
       << "set ylabel 'R_c'\n"
       << "plot ";
    bool first = true;
    for (SchemeKind kind : manifest.schemes) {
      for (std::uint64_t seed : manifest.seeds) {
        if (!first) gp << ", \\\n     ";
        gp << "'rc_curve_" << manifest.label << "_" << scheme_name(kind)
           << "_s" << seed << ".csv' using 1:2 with lines";
        first = false;
      }
    }
    gp << "\n";
    std::string gp_path =
        (fs::path(manifest.out_dir) / ("plot_rc_" + manifest.label + ".gp"))
            .string();
    write_file_atomic(gp_path, gp.str());
    written.push_back(gp_path);
  }
  return written;
}

}  // namespace linksleep
