#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linksleep/schemes.hpp"

namespace linksleep {

/// Energy accounting for one powerdown trace over the cooldown period in
/// which demand R drops one unit per time step from floor(R_0) to
/// floor(R_h).
struct EnergyReport {
  long long sleep_units;
  long long max_active_units;  // M * (floor(R_0) - floor(R_h))
  double savings_ratio;
  std::vector<std::pair<double, double>> curve;  // (load, active fraction)
};

/// Total link sleep time units: for each integer demand level R in
/// [floor(R_h), floor(R_0)], the longest removal prefix k whose capacities
/// R_1..R_k all stay at or above R (links l_1..l_k can sleep at that level).
long long sleep_units(const PowerdownTrace& trace);

EnergyReport energy_savings(const PowerdownTrace& trace, int edge_count_m,
                            int grid_points = 100);

/// Active-links-vs-load curve: for each load fraction p on a uniform grid
/// over (R_h/R_0, 1], active links = M - max{k | R_i >= p*R_0 for i<=k},
/// both axes as fractions.
std::vector<std::pair<double, double>> active_links_curve(
    const PowerdownTrace& trace, int edge_count_m, int grid_points);

std::string energy_csv_header();
std::string energy_csv_row(const std::string& network,
                           const PowerdownTrace& trace,
                           const EnergyReport& report);
std::string curve_csv(const std::vector<std::pair<double, double>>& curve);

}  // namespace linksleep
