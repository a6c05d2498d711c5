// Command-line front end: generate/ingest topologies, run link powerdown
// schemes, compute capacity and min-cut diagnostics, aggregate energy
// reports, and run the packet-level simulator. All outputs are plot-ready
// CSVs; identical arguments reproduce byte-identical files.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linksleep/betweenness.hpp"
#include "linksleep/capacity.hpp"
#include "linksleep/edge_list_io.hpp"
#include "linksleep/energy.hpp"
#include "linksleep/experiment.hpp"
#include "linksleep/generators.hpp"
#include "linksleep/graph.hpp"
#include "linksleep/packet_sim.hpp"
#include "linksleep/rocketfuel.hpp"
#include "linksleep/schemes.hpp"

namespace fs = std::filesystem;
using namespace linksleep;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

Topology load_input(const std::string& path) {
  return parse_edge_list(read_file(path));
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoi(tok));
  }
  return out;
}

int cmd_generate(const std::string& family, int nodes, int edges,
                 std::uint64_t seed, const std::string& out_path) {
  GenSpec spec{Family::ER, nodes, edges, seed};
  Topology g = [&] {
    if (family == "er") return generate_er(spec);
    if (family == "ba") {
      spec.family = Family::BA;
      return generate_ba(spec);
    }
    if (family == "hier") return generate_hierarchical(seed);
    throw std::invalid_argument("unknown family '" + family + "'");
  }();
  write_file_atomic(out_path, write_edge_list(g));
  auto cap = critical_rate(g);
  std::cout << "N=" << g.node_count() << " M=" << g.edge_count()
            << " R0=" << cap.r_c << "\n";
  return kExitOk;
}

int cmd_ingest(const std::string& in_path, const std::string& out_path) {
  IngestReport report;
  Topology g = ingest_rocketfuel(read_file(in_path), &report);
  write_file_atomic(out_path, write_edge_list(g));
  std::cout << "records=" << report.records
            << " external_skipped=" << report.external_skipped
            << " duplicate_links=" << report.duplicate_links
            << " self_loops=" << report.self_loops
            << " nodes_outside_giant=" << report.nodes_outside_giant << "\n"
            << "N=" << report.final_nodes << " M=" << report.final_edges
            << "\n";
  return kExitOk;
}

int cmd_betweenness(const std::string& in_path, const std::string& out_path) {
  Topology g = load_input(in_path);
  auto map = edge_betweenness(g);
  write_file_atomic(out_path, betweenness_csv(g, map));
  auto [e, b_max] = max_edge_betweenness(map);
  std::cout << "B_max=" << b_max << " edge=" << e << "\n";
  return kExitOk;
}

int cmd_powerdown(const std::string& in_path, const std::string& scheme,
                  std::uint64_t seed, int window, double alpha,
                  const std::string& out_dir,
                  const std::string& mincut_indices, bool gnuplot) {
  Topology g = load_input(in_path);
  if (!is_connected(g)) {
    std::cerr << "error: input topology is disconnected\n";
    return kExitData;
  }
  SchemeConfig cfg{scheme_from_name(scheme), seed, window, alpha};
  PowerdownTrace trace = run_scheme(g, cfg);
  trace.network_label = fs::path(in_path).stem().string();
  if (trace.h() == 0) {
    std::cerr << "warning: input is already a spanning tree; empty trace\n";
  }

  std::string stem = scheme + "_s" + std::to_string(seed);
  std::string trace_path =
      (fs::path(out_dir) / ("trace_" + stem + ".csv")).string();
  write_file_atomic(trace_path, trace_csv(trace, g));

  std::vector<std::pair<int, double>> curve;
  curve.emplace_back(0, trace.r0);
  for (int i = 0; i < trace.h(); ++i) {
    curve.emplace_back(i + 1, trace.r_values[static_cast<size_t>(i)]);
  }
  std::string curve_path =
      (fs::path(out_dir) / ("rc_curve_" + stem + ".csv")).string();
  write_file_atomic(curve_path, rc_curve_csv(curve));

  if (!mincut_indices.empty()) {
    std::ostringstream all;
    bool first = true;
    for (int idx : parse_int_list(mincut_indices)) {
      Topology snapshot = replay_trace(g, trace, idx);
      auto hist = min_cut_histogram(snapshot);
      std::string csv = min_cut_csv(hist, idx);
      if (!first) csv = csv.substr(csv.find('\n') + 1);  // drop repeat header
      all << csv;
      first = false;
    }
    write_file_atomic((fs::path(out_dir) / ("mincut_" + stem + ".csv"))
                          .string(),
                      all.str());
  }

  if (gnuplot) {
    std::ostringstream gp;
    gp << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "set xlabel 'links removed'\nset ylabel 'R_c'\n"
       << "plot 'rc_curve_" << stem << ".csv' using 1:2 with lines\n";
    write_file_atomic((fs::path(out_dir) / ("plot_" + stem + ".gp")).string(),
                      gp.str());
  }

  std::cout << "h=" << trace.h() << " R0=" << trace.r0
            << " Rh=" << trace.r_final();
  if (trace.kappa) std::cout << " kappa=" << *trace.kappa;
  std::cout << "\n" << trace_path << "\n" << curve_path << "\n";
  return kExitOk;
}

int cmd_report(const std::vector<std::string>& trace_paths, int grid,
               const std::string& out_dir, bool gnuplot) {
  std::vector<std::pair<std::string, PowerdownTrace>> traces;
  std::ostringstream per_run;
  per_run << energy_csv_header();
  for (const auto& path : trace_paths) {
    PowerdownTrace trace = parse_trace_csv(read_file(path));
    std::string network = trace.network_label.empty()
                              ? "network"
                              : trace.network_label;
    EnergyReport report = energy_savings(trace, trace.edge_count, grid);
    per_run << energy_csv_row(network, trace, report);
    std::string stem = fs::path(path).stem().string();
    write_file_atomic(
        (fs::path(out_dir) / ("active_links_" + stem + ".csv")).string(),
        curve_csv(report.curve));
    traces.emplace_back(network, std::move(trace));
  }
  write_file_atomic((fs::path(out_dir) / "energy_runs.csv").string(),
                    per_run.str());
  std::string summary = summary_csv(traces);
  write_file_atomic((fs::path(out_dir) / "energy_summary.csv").string(),
                    summary);
  if (gnuplot) {
    std::ostringstream gp;
    gp << "set datafile separator ','\nset key autotitle columnhead\n"
       << "set xlabel 'traffic load / R_0'\n"
       << "set ylabel 'active link fraction'\nplot ";
    for (size_t i = 0; i < trace_paths.size(); ++i) {
      if (i) gp << ", \\\n     ";
      gp << "'active_links_" << fs::path(trace_paths[i]).stem().string()
         << ".csv' using 1:2 with lines";
    }
    gp << "\n";
    write_file_atomic((fs::path(out_dir) / "plot_active_links.gp").string(),
                      gp.str());
  }
  std::cout << summary;
  return kExitOk;
}

int cmd_simulate(const std::string& in_path, const std::string& grid,
                 int steps, int warmup, const std::string& seeds,
                 const std::string& out_path) {
  Topology g = load_input(in_path);
  auto rates = parse_int_list(grid);
  if (rates.empty()) {
    std::cerr << "error: empty rate grid\n";
    return kExitData;
  }
  std::ostringstream out;
  out << sim_csv_header();
  for (int r : rates) {
    for (int seed : parse_int_list(seeds)) {
      SimConfig cfg{r, steps, warmup, static_cast<std::uint64_t>(seed)};
      SimStats stats = simulate(g, cfg);
      out << sim_csv_row(cfg, stats);
    }
  }
  write_file_atomic(out_path, out.str());
  std::cout << out_path << "\n";
  return kExitOk;
}

int cmd_experiment(const std::string& manifest_path) {
  ExperimentManifest manifest = parse_manifest(read_file(manifest_path));
  for (const auto& path : run_experiment(manifest)) {
    std::cout << path << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coordinated link powerdown analysis toolkit"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a topology");
  std::string family = "er", out_path = "topology.edges";
  int nodes = 353, edges = 820;
  std::uint64_t seed = 1;
  gen->add_option("--family", family, "er|ba|hier")->required();
  gen->add_option("--nodes", nodes, "node count");
  gen->add_option("--edges", edges, "edge count");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--out", out_path, "output edge-list path")->required();

  // ingest
  auto* ing = app.add_subcommand("ingest", "Ingest a Rocketfuel cch file");
  std::string ingest_in, ingest_out;
  ing->add_option("--input", ingest_in)->required();
  ing->add_option("--out", ingest_out)->required();

  // betweenness
  auto* bet = app.add_subcommand("betweenness", "Edge betweenness CSV");
  std::string bet_in, bet_out;
  bet->add_option("--input", bet_in)->required();
  bet->add_option("--out", bet_out)->required();

  // powerdown
  auto* pd = app.add_subcommand("powerdown", "Run a link powerdown scheme");
  std::string pd_in, pd_scheme, pd_out = ".", pd_mincut;
  std::uint64_t pd_seed = 1;
  int pd_window = 20;
  double pd_alpha = 1.0;
  bool pd_gnuplot = false;
  pd->add_option("--input", pd_in)->required();
  pd->add_option("--scheme", pd_scheme, "random|sbf|lbf|hybrid")->required();
  pd->add_option("--seed", pd_seed);
  pd->add_option("--window", pd_window, "Hybrid transition window l");
  pd->add_option("--alpha", pd_alpha, "QoS scaling in (0,1]");
  pd->add_option("--out", pd_out, "output directory");
  pd->add_option("--mincut-indices", pd_mincut,
                 "comma list of removal indices for min-cut histograms");
  pd->add_flag("--gnuplot", pd_gnuplot, "emit companion plot script");

  // report
  auto* rep = app.add_subcommand("report", "Aggregate energy reports");
  std::vector<std::string> rep_traces;
  std::string rep_out = ".";
  int rep_grid = 100;
  bool rep_gnuplot = false;
  rep->add_option("traces", rep_traces, "trace CSV files")->required();
  rep->add_option("--grid", rep_grid, "active-links curve grid points");
  rep->add_option("--out", rep_out, "output directory");
  rep->add_flag("--gnuplot", rep_gnuplot);

  // simulate
  auto* sim = app.add_subcommand("simulate", "Packet-level simulation");
  std::string sim_in, sim_grid, sim_seeds = "1", sim_out = "sim_stats.csv";
  int sim_steps = 1000, sim_warmup = 200;
  sim->add_option("--input", sim_in)->required();
  sim->add_option("--grid", sim_grid, "comma list of injection rates R")
      ->required();
  sim->add_option("--steps", sim_steps);
  sim->add_option("--warmup", sim_warmup);
  sim->add_option("--seeds", sim_seeds, "comma list of seeds");
  sim->add_option("--out", sim_out);

  // experiment
  auto* exp = app.add_subcommand("experiment", "Run a manifest matrix");
  std::string exp_manifest;
  exp->add_option("--manifest", exp_manifest)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(family, nodes, edges, seed,
                                           out_path);
    if (ing->parsed()) return cmd_ingest(ingest_in, ingest_out);
    if (bet->parsed()) return cmd_betweenness(bet_in, bet_out);
    if (pd->parsed()) {
      return cmd_powerdown(pd_in, pd_scheme, pd_seed, pd_window, pd_alpha,
                           pd_out, pd_mincut, pd_gnuplot);
    }
    if (rep->parsed()) return cmd_report(rep_traces, rep_grid, rep_out,
                                         rep_gnuplot);
    if (sim->parsed()) {
      if (sim_steps <= sim_warmup || sim_steps <= 0) {
        std::cerr << "error: need steps > warmup > =0\n";
        return kExitData;
      }
      return cmd_simulate(sim_in, sim_grid, sim_steps, sim_warmup, sim_seeds,
                          sim_out);
    }
    if (exp->parsed()) return cmd_experiment(exp_manifest);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
