#include <benchmark/benchmark.h>

#include "linksleep/betweenness.hpp"
#include "linksleep/capacity.hpp"
#include "linksleep/generators.hpp"
#include "linksleep/schemes.hpp"

using namespace linksleep;

static void BM_EdgeBetweenness(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Topology g = generate_ba({Family::BA, n, 2 * n, 7});
  for (auto _ : state) {
    benchmark::DoNotOptimize(edge_betweenness(g));
  }
}
BENCHMARK(BM_EdgeBetweenness)->Arg(100)->Arg(200)->Arg(353);

static void BM_GomoryHuTree(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Topology g = generate_ba({Family::BA, n, 2 * n, 7});
  for (auto _ : state) {
    benchmark::DoNotOptimize(gomory_hu_tree(g));
  }
}
BENCHMARK(BM_GomoryHuTree)->Arg(100)->Arg(200)->Arg(353);

static void BM_MinCutHistogram(benchmark::State& state) {
  Topology g = generate_ba({Family::BA, 200, 400, 7});
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_cut_histogram(g));
  }
}
BENCHMARK(BM_MinCutHistogram);

// One full powerdown run dominates experiment cost: h betweenness
// recomputations on shrinking residual graphs.
static void BM_SchemeRun(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Topology g = generate_ba({Family::BA, n, 2 * n, 7});
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_scheme(g, {SchemeKind::SBF, 1, 20, 1.0}));
  }
}
BENCHMARK(BM_SchemeRun)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
