#include "linksleep/energy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace linksleep {

namespace {

// prefix_min[k] = min(R_1..R_k); prefix_min[0] unused sentinel.
std::vector<double> prefix_minima(const std::vector<double>& r_values) {
  std::vector<double> pm(r_values.size() + 1,
                         std::numeric_limits<double>::infinity());
  for (size_t i = 0; i < r_values.size(); ++i) {
    pm[i + 1] = std::min(pm[i], r_values[i]);
  }
  return pm;
}

// Longest prefix whose capacities all stay at or above `threshold`.
int sleepable_prefix(const std::vector<double>& prefix_min, double threshold) {
  int k = 0;
  for (size_t i = 1; i < prefix_min.size(); ++i) {
    if (prefix_min[i] >= threshold) k = static_cast<int>(i);
    else break;
  }
  return k;
}

}  // namespace

long long sleep_units(const PowerdownTrace& trace) {
  if (trace.h() == 0) return 0;
  const long long r_top = static_cast<long long>(std::floor(trace.r0));
  const long long r_bot = static_cast<long long>(std::floor(trace.r_final()));
  if (r_top < r_bot) {
    throw std::invalid_argument("floor(R_0) below floor(R_h)");
  }
  auto pm = prefix_minima(trace.r_values);
  long long total = 0;
  for (long long r = r_bot; r <= r_top; ++r) {
    total += sleepable_prefix(pm, static_cast<double>(r));
  }
  return total;
}

EnergyReport energy_savings(const PowerdownTrace& trace, int edge_count_m,
                            int grid_points) {
  const long long r_top = static_cast<long long>(std::floor(trace.r0));
  const long long r_bot = static_cast<long long>(std::floor(trace.r_final()));
  const long long denom = static_cast<long long>(edge_count_m) *
                          (r_top - r_bot);
  if (denom <= 0) {
    throw std::invalid_argument(
        "degenerate cooldown: floor(R_0) must exceed floor(R_h)");
  }
  EnergyReport report;
  report.sleep_units = sleep_units(trace);
  report.max_active_units = denom;
  report.savings_ratio =
      static_cast<double>(report.sleep_units) / static_cast<double>(denom);
  report.curve = active_links_curve(trace, edge_count_m, grid_points);
  return report;
}

std::vector<std::pair<double, double>> active_links_curve(
    const PowerdownTrace& trace, int edge_count_m, int grid_points) {
  if (grid_points < 2) throw std::invalid_argument("need >= 2 grid points");
  const double m = static_cast<double>(edge_count_m);
  auto pm = prefix_minima(trace.r_values);
  const double lo = trace.r0 > 0.0 ? trace.r_final() / trace.r0 : 0.0;
  std::vector<std::pair<double, double>> curve;
  curve.reserve(static_cast<size_t>(grid_points));
  for (int i = 0; i < grid_points; ++i) {
    // Uniform grid over [lo, 1]; including lo makes the spanning-tree floor
    // (M-h)/M an actual curve point rather than a limit.
    double p = lo + (1.0 - lo) * static_cast<double>(i) /
                        static_cast<double>(grid_points - 1);
    int k = sleepable_prefix(pm, p * trace.r0);
    curve.emplace_back(p, (m - static_cast<double>(k)) / m);
  }
  return curve;
}

std::string energy_csv_header() {
  return "network,scheme,seed,sleep_units,max_active_units,savings_ratio\n";
}

std::string energy_csv_row(const std::string& network,
                           const PowerdownTrace& trace,
                           const EnergyReport& report) {
  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", report.savings_ratio);
  out << network << "," << scheme_name(trace.scheme) << "," << trace.seed
      << "," << report.sleep_units << "," << report.max_active_units << ","
      << buf << "\n";
  return out.str();
}

std::string curve_csv(const std::vector<std::pair<double, double>>& curve) {
  std::ostringstream out;
  out << "load_fraction,active_fraction\n";
  char b1[64], b2[64];
  for (auto [p, a] : curve) {
    std::snprintf(b1, sizeof b1, "%.10g", p);
    std::snprintf(b2, sizeof b2, "%.10g", a);
    out << b1 << "," << b2 << "\n";
  }
  return out.str();
}

}  // namespace linksleep
