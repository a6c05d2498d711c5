#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "linksleep/energy.hpp"

using namespace linksleep;

namespace {

PowerdownTrace make_trace(double r0, std::vector<double> r_values) {
  PowerdownTrace t;
  t.r0 = r0;
  t.r_values = std::move(r_values);
  t.removals.resize(t.r_values.size(), 0);
  t.phases.resize(t.r_values.size(), "rand");
  return t;
}

// Cooldown timeline oracle: demand drops one unit per time step; at each
// level, walk the removal list in order and count links whose entire
// prefix kept capacity at or above the current demand.
long long sleep_units_oracle(const PowerdownTrace& t) {
  if (t.h() == 0) return 0;
  long long total = 0;
  long long r_top = static_cast<long long>(std::floor(t.r0));
  long long r_bot = static_cast<long long>(std::floor(t.r_values.back()));
  for (long long r = r_bot; r <= r_top; ++r) {
    long long asleep = 0;
    for (int i = 0; i < t.h(); ++i) {
      bool prefix_ok = true;
      for (int j = 0; j <= i; ++j) {
        if (t.r_values[static_cast<size_t>(j)] < static_cast<double>(r)) {
          prefix_ok = false;
          break;
        }
      }
      if (prefix_ok) asleep = i + 1;
      else break;
    }
    total += asleep;
  }
  return total;
}

}  // namespace

TEST_CASE("worked sleep example") {
  auto t = make_trace(5.0, {4, 4, 2});
  // R=5:k=0, R=4:k=2, R=3:k=2, R=2:k=3 -> 7
  CHECK(sleep_units(t) == 7);
}

TEST_CASE("all values above floor(R0): every prefix maximal") {
  auto t = make_trace(5.2, {6, 5.5, 5.0});
  long long h = 3;
  long long span = 5 - 5 + 1;
  CHECK(sleep_units(t) == h * span);
}

TEST_CASE("empty trace sleeps zero") {
  auto t = make_trace(3.0, {});
  CHECK(sleep_units(t) == 0);
}

TEST_CASE("savings ratio worked example") {
  auto t = make_trace(5.0, {4, 4, 2});
  auto report = energy_savings(t, 5);
  CHECK(report.sleep_units == 7);
  CHECK(report.max_active_units == 15);
  CHECK(report.savings_ratio == doctest::Approx(7.0 / 15.0));
  CHECK(report.savings_ratio <= 1.0);
}

TEST_CASE("degenerate denominator rejected") {
  auto t = make_trace(3.2, {3.1, 3.05});
  CHECK_THROWS_AS(energy_savings(t, 5), std::invalid_argument);
}

TEST_CASE("sleep_units matches cooldown timeline oracle on random traces") {
  std::mt19937_64 rng(512);
  std::uniform_int_distribution<int> hh(1, 20);
  std::uniform_real_distribution<double> rv(0.0, 50.0);
  for (int trial = 0; trial < 50; ++trial) {
    int h = hh(rng);
    std::vector<double> values(static_cast<size_t>(h));
    for (auto& v : values) v = rv(rng);
    double r0 = rv(rng);
    // Keep the precondition floor(R0) >= floor(Rh).
    if (std::floor(r0) < std::floor(values.back())) {
      r0 = values.back() + 1.0;
    }
    auto t = make_trace(r0, values);
    CHECK(sleep_units(t) == sleep_units_oracle(t));
  }
}

TEST_CASE("raising any R_i never decreases SLEEP") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> rv(0.0, 30.0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> values(10);
    for (auto& v : values) v = rv(rng);
    auto t = make_trace(30.0, values);
    long long base = sleep_units(t);
    std::uniform_int_distribution<size_t> pick(0, values.size() - 1);
    size_t i = pick(rng);
    auto bumped = values;
    bumped[i] += 5.0;
    CHECK(sleep_units(make_trace(30.0, bumped)) >= base);
  }
}

TEST_CASE("active links curve worked example") {
  auto t = make_trace(5.0, {4, 4, 2});
  // p = 0.8 -> threshold 4 -> prefix k = 2 -> active 3/5.
  auto curve = active_links_curve(t, 5, 10000);
  auto at = [&](double p) {
    for (auto [load, active] : curve) {
      if (std::abs(load - p) < 1e-4) return active;
    }
    FAIL("grid point not found");
    return -1.0;
  };
  CHECK(at(0.8) == doctest::Approx(3.0 / 5.0).epsilon(1e-6));
}

TEST_CASE("curve floor is the spanning tree fraction") {
  // 5 nodes, M = 6, h = 2 removals to reach the tree.
  PowerdownTrace t = make_trace(10.0, {9.0, 4.0});
  auto curve = active_links_curve(t, 6, 50);
  // Just above Rh/R0 every removable link sleeps: active = (M-h)/M.
  CHECK(curve.front().second == doctest::Approx(4.0 / 6.0));
  // Non-increasing as load decreases.
  for (size_t i = 1; i < curve.size(); ++i) {
    CHECK(curve[i - 1].second <= curve[i].second + 1e-12);
  }
  CHECK(curve.back().first == doctest::Approx(1.0));
}
