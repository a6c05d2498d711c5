#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <filesystem>

#include "linksleep/experiment.hpp"

using namespace linksleep;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir(const char* tag) {
    path = fs::temp_directory_path() /
           (std::string("linksleep_test_") + tag + "_" +
            std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("manifest parsing") {
  ExperimentManifest m = parse_manifest(
      "# comment\n"
      "network = er:30:60\n"
      "label = small-er\n"
      "network_seed = 9\n"
      "schemes = sbf, lbf\n"
      "seeds = 1, 2, 3\n"
      "alpha = 0.5\n"
      "window = 10\n"
      "grid = 50\n"
      "gnuplot = true\n");
  CHECK(m.network == "er:30:60");
  CHECK(m.label == "small-er");
  CHECK(m.network_seed == 9);
  REQUIRE(m.schemes.size() == 2);
  CHECK(m.schemes[0] == SchemeKind::SBF);
  CHECK(m.schemes[1] == SchemeKind::LBF);
  CHECK(m.seeds == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(m.alpha == 0.5);
  CHECK(m.window_l == 10);
  CHECK(m.grid_points == 50);
  CHECK(m.gnuplot);
}

TEST_CASE("manifest defaults and validation") {
  ExperimentManifest m = parse_manifest("network = hier\nschemes = random\n");
  CHECK(m.label == "hier");
  CHECK(m.seeds == std::vector<std::uint64_t>{1});
  CHECK(m.alpha == 1.0);
  CHECK_FALSE(m.gnuplot);

  CHECK_THROWS_AS(parse_manifest("schemes = sbf\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_manifest("network = hier\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_manifest("network = hier\nschemes = sbf\nbogus = 1\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_manifest("just a line\n"), std::invalid_argument);
}

TEST_CASE("load_network dispatch") {
  Topology er = load_network("er:20:40", 3);
  CHECK(er.node_count() == 20);
  CHECK(er.edge_count() == 40);
  Topology ba = load_network("ba:20:40", 3);
  CHECK(ba.node_count() == 20);
  Topology hier = load_network("hier", 7);
  CHECK(hier.node_count() == 353);
  CHECK_THROWS_AS(load_network("grid:4:4", 1), std::invalid_argument);
  CHECK_THROWS_AS(load_network("er:20", 1), std::invalid_argument);
}

TEST_CASE("atomic file round trip") {
  TempDir dir("io");
  std::string path = (dir.path / "sub" / "x.txt").string();
  write_file_atomic(path, "hello\n");
  CHECK(read_file(path) == "hello\n");
  CHECK_FALSE(fs::exists(path + ".tmp"));
  CHECK_THROWS_AS(read_file((dir.path / "missing").string()),
                  std::runtime_error);
}

TEST_CASE("run_experiment writes the expected files") {
  TempDir dir("run");
  ExperimentManifest m = parse_manifest(
      "network = er:30:60\n"
      "label = er30\n"
      "network_seed = 4\n"
      "schemes = sbf, random\n"
      "seeds = 1, 2\n"
      "gnuplot = true\n");
  m.out_dir = dir.path.string();
  auto written = run_experiment(m);

  // 4 runs x (trace + rc curve + active links) + summary + per-run + plot
  CHECK(written.size() == 4 * 3 + 3);
  for (const auto& p : written) CHECK(fs::exists(p));
  CHECK(fs::exists(dir.path / "trace_er30_sbf_s1.csv"));
  CHECK(fs::exists(dir.path / "rc_curve_er30_random_s2.csv"));
  CHECK(fs::exists(dir.path / "energy_summary_er30.csv"));
  CHECK(fs::exists(dir.path / "plot_rc_er30.gp"));

  std::string summary = read_file((dir.path / "energy_summary_er30.csv")
                                      .string());
  CHECK(summary.find("network,scheme,runs,mean_savings_pct,stddev_pct") == 0);
  CHECK(summary.find("er30,sbf,2,") != std::string::npos);
  CHECK(summary.find("er30,random,2,") != std::string::npos);
}

TEST_CASE("re-running a manifest reproduces byte-identical outputs") {
  TempDir dir_a("rep_a");
  TempDir dir_b("rep_b");
  ExperimentManifest m = parse_manifest(
      "network = ba:30:60\n"
      "label = ba30\n"
      "network_seed = 11\n"
      "schemes = lbf, hybrid, random\n"
      "seeds = 5\n"
      "window = 8\n");
  m.out_dir = dir_a.path.string();
  auto first = run_experiment(m);
  m.out_dir = dir_b.path.string();
  auto second = run_experiment(m);
  REQUIRE(first.size() == second.size());
  for (size_t i = 0; i < first.size(); ++i) {
    CHECK(fs::path(first[i]).filename() == fs::path(second[i]).filename());
    CHECK(read_file(first[i]) == read_file(second[i]));
  }
}

TEST_CASE("summary rejects traces that disagree on edge count") {
  Topology a(3, {{0, 1}, {1, 2}, {0, 2}});
  Topology b(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  PowerdownTrace ta = run_scheme(a, {SchemeKind::SBF, 1, 20, 1.0});
  PowerdownTrace tb = run_scheme(b, {SchemeKind::SBF, 1, 20, 1.0});
  std::vector<std::pair<std::string, PowerdownTrace>> traces{
      {"net", ta}, {"net", tb}};
  CHECK_THROWS_AS(summary_csv(traces), std::invalid_argument);
}
