#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "linksleep/capacity.hpp"
#include "linksleep/generators.hpp"
#include "linksleep/schemes.hpp"
#include "test_util.hpp"

using namespace linksleep;

namespace {

Topology c4() { return Topology(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

void check_trace_invariants(const Topology& g, const PowerdownTrace& trace) {
  CHECK(trace.h() == max_removable(g));
  Topology work = g;
  for (int i = 0; i < trace.h(); ++i) {
    work.deactivate(trace.removals[static_cast<size_t>(i)]);
    CHECK(is_connected(work));
  }
  CHECK(spanning_tree_reached(work));
  if (trace.h() > 0) {
    CHECK(trace.r_values.back() ==
          doctest::Approx(critical_rate(work).r_c));
  }
}

}  // namespace

TEST_CASE("tree input yields an empty trace") {
  Topology t(3, {{0, 1}, {1, 2}});
  for (auto kind : {SchemeKind::Random, SchemeKind::SBF, SchemeKind::LBF,
                    SchemeKind::Hybrid}) {
    auto trace = run_scheme(t, {kind, 1});
    CHECK(trace.h() == 0);
    CHECK(trace.r0 == doctest::Approx(3.0));
  }
}

TEST_CASE("C4 SBF removes lowest-id edge of the tie") {
  auto trace = run_scheme(c4(), {SchemeKind::SBF});
  REQUIRE(trace.h() == 1);
  CHECK(trace.removals[0] == 0);
  CHECK(trace.r0 == doctest::Approx(6.0));
  CHECK(trace.r_values[0] == doctest::Approx(3.0));
}

TEST_CASE("disconnected input rejected") {
  Topology g = c4();
  g.deactivate(0);
  g.deactivate(1);
  CHECK_THROWS_AS(run_scheme(g, {SchemeKind::Random, 1}),
                  std::invalid_argument);
}

TEST_CASE("all schemes satisfy structural invariants on random graphs") {
  std::mt19937_64 rng(3000);
  for (int trial = 0; trial < 4; ++trial) {
    Topology g = testutil::random_connected_graph(16, 10, rng);
    for (auto kind : {SchemeKind::Random, SchemeKind::SBF, SchemeKind::LBF,
                      SchemeKind::Hybrid}) {
      auto trace = run_scheme(g, {kind, 42, 5});
      check_trace_invariants(g, trace);
    }
  }
}

TEST_CASE("SBF/LBF determinism") {
  Topology g = generate_ba({Family::BA, 40, 80, 9});
  auto a = run_scheme(g, {SchemeKind::LBF});
  auto b = run_scheme(g, {SchemeKind::LBF});
  CHECK(a.removals == b.removals);
  CHECK(a.r_values == b.r_values);
}

TEST_CASE("Random determinism per seed") {
  Topology g = generate_er({Family::ER, 30, 60, 4});
  auto a = run_scheme(g, {SchemeKind::Random, 77});
  auto b = run_scheme(g, {SchemeKind::Random, 77});
  CHECK(a.removals == b.removals);
  auto c = run_scheme(g, {SchemeKind::Random, 78});
  CHECK(a.removals != c.removals);
}

TEST_CASE("Hybrid equals LBF on the prefix up to kappa") {
  Topology g = generate_ba({Family::BA, 80, 200, 11});
  auto hybrid = run_scheme(g, {SchemeKind::Hybrid, 5, 10});
  auto lbf = run_scheme(g, {SchemeKind::LBF});
  if (hybrid.kappa) {
    int kappa = *hybrid.kappa;
    for (int i = 0; i < kappa; ++i) {
      CHECK(hybrid.removals[static_cast<size_t>(i)] ==
            lbf.removals[static_cast<size_t>(i)]);
      CHECK(hybrid.phases[static_cast<size_t>(i)] == "lbf");
    }
    for (int i = kappa; i < hybrid.h(); ++i) {
      CHECK(hybrid.phases[static_cast<size_t>(i)] == "random");
    }
  } else {
    CHECK(hybrid.removals == lbf.removals);
  }
}

TEST_CASE("detect_phase_transition examples") {
  // kappa = 1: 10 > 9 and 10 > 4; R_3 = 4 < 10/2.
  CHECK(detect_phase_transition({10, 9, 4, 3}, 10, 3) == 1);
  // strictly increasing: criterion 1 never holds
  CHECK(detect_phase_transition({1, 2, 3, 4, 5}, 1, 3) == std::nullopt);
  // every candidate fails one criterion
  CHECK(detect_phase_transition({5, 5, 6, 4, 3, 2, 2}, 5, 3) ==
        std::nullopt);
}

TEST_CASE("detect_phase_transition agrees with exhaustive scan oracle") {
  std::mt19937_64 rng(888);
  std::uniform_real_distribution<double> val(0.0, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> len(2, 15);
    int h = len(rng);
    std::vector<double> r(static_cast<size_t>(h));
    for (auto& x : r) x = val(rng);
    int l = std::uniform_int_distribution<int>(2, 6)(rng);
    std::optional<int> oracle;
    for (int kappa = 1; kappa <= h && !oracle; ++kappa) {
      if (kappa + l - 1 > h) break;
      bool ok = true;
      for (int j = 1; j <= l - 1; ++j) {
        if (!(r[static_cast<size_t>(kappa - 1)] >
              r[static_cast<size_t>(kappa + j - 1)]))
          ok = false;
      }
      if (ok && r[static_cast<size_t>(kappa + l - 2)] <
                    r[static_cast<size_t>(kappa - 1)] / 2.0) {
        oracle = kappa;
      }
    }
    CHECK(detect_phase_transition(r, 0.0, l) == oracle);
  }
}

TEST_CASE("replay_trace prefixes and round trip") {
  Topology g = generate_er({Family::ER, 20, 40, 2});
  auto trace = run_scheme(g, {SchemeKind::SBF});
  CHECK(replay_trace(g, trace, 0) == g);
  Topology final = replay_trace(g, trace, trace.h());
  CHECK(spanning_tree_reached(final));

  Topology mid = replay_trace(g, trace, 3);
  for (int i = 2; i >= 0; --i) {
    mid.reactivate(trace.removals[static_cast<size_t>(i)]);
  }
  CHECK(mid == g);

  CHECK_THROWS_AS(replay_trace(g, trace, trace.h() + 1), std::out_of_range);
  CHECK_THROWS_AS(replay_trace(g, trace, -1), std::out_of_range);
}

TEST_CASE("replay rejects mismatched topology") {
  Topology g = generate_er({Family::ER, 20, 40, 2});
  auto trace = run_scheme(g, {SchemeKind::SBF});
  Topology other = generate_er({Family::ER, 25, 50, 2});
  CHECK_THROWS_AS(replay_trace(other, trace, 1), std::invalid_argument);
}

TEST_CASE("trace csv round trip") {
  Topology g = generate_ba({Family::BA, 30, 60, 6});
  auto trace = run_scheme(g, {SchemeKind::Hybrid, 3, 5, 0.9});
  trace.network_label = "BA30";
  auto parsed = parse_trace_csv(trace_csv(trace, g));
  CHECK(parsed.removals == trace.removals);
  CHECK(parsed.r_values == trace.r_values);
  CHECK(parsed.phases == trace.phases);
  CHECK(parsed.r0 == trace.r0);
  CHECK(parsed.alpha == trace.alpha);
  CHECK(parsed.kappa == trace.kappa);
  CHECK(parsed.scheme == trace.scheme);
  CHECK(parsed.network_label == "BA30");
  CHECK(parsed.edge_count == g.edge_count());
}
