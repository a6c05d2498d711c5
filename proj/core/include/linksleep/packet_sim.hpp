#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linksleep/graph.hpp"

namespace linksleep {

struct SimConfig {
  int rate_r;        // packets injected per time step
  int steps;
  int warmup_steps;
  std::uint64_t seed;
  long long max_in_flight = 50'000'000;  // memory guard
};

struct SimStats {
  long long created = 0;
  long long delivered = 0;
  long long in_flight_at_end = 0;
  double order_parameter = 0.0;  // queue growth per step after warmup, / R
  long long max_queue = 0;
  long long hop_violations = 0;  // delivered packets off a shortest path
};

/// Discrete-time shortest-path packet forwarding: R packets injected per
/// step with distinct random endpoints, every directed interface forwards
/// at most one packet per step, ties between shortest next hops are broken
/// uniformly at random per packet per hop. Queues are unbounded FIFOs.
SimStats simulate(const Topology& g, const SimConfig& config);

/// Empirical critical rate: integer bisection on R between r_low (free
/// flow) and r_high (congested) with order-parameter threshold 0.05;
/// returns the midpoint of the final bracket.
double locate_transition(const Topology& g, const SimConfig& config_template,
                         int r_low, int r_high);

std::string sim_csv_header();
std::string sim_csv_row(const SimConfig& config, const SimStats& stats);

}  // namespace linksleep
