#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "reservekit/grid.hpp"

namespace reservekit {

/// Parameters of the per-parcel competition model with crowding:
///
///   dN_i/dt = r_i N_i - N_i sum_{j != i} alpha_ij N_j - beta_i N_i^2
///
/// integrated with `steps` explicit Euler steps of size `dt` (simulated time
/// is steps * dt).
struct LVParams {
  std::vector<double> r;                   // birth rate per species
  std::vector<std::vector<double>> alpha;  // interspecific competition, zero diagonal
  std::vector<double> beta;                // crowding coefficient per species
  double dt = 0.01;
  std::int64_t steps = 2000;  // "T" in serialized form

  std::size_t species_count() const { return r.size(); }

  /// Throws on shape mismatch, negative rates, nonzero alpha diagonal, dt <= 0
  /// or a negative step count.
  void validate() const;

  bool operator==(const LVParams&) const = default;
};

/// r = 0.1, alpha_ij = 0.0005 (i != j), beta = 0.001, dt = 0.01, 2000 steps.
LVParams default_lv_params(std::size_t species);

/// All rates zero; simulation is the identity map.
LVParams zero_dynamics(std::size_t species, std::int64_t steps = 2000);

/// Simulated future counts for every parcel, before rounding.
struct SimulatedGrid {
  RealGrid counts;
  LVParams params;
};

/// One simultaneous Euler update of a single parcel's species counts,
/// clamped at zero.
std::vector<double> lv_step(std::span<const double> state, const LVParams& params);

/// Runs `params.steps` steps from `initial`.
std::vector<double> simulate_parcel(std::span<const double> initial, const LVParams& params);

/// Runs each parcel independently from its observed counts.
SimulatedGrid simulate(const CountsGrid& observed, const LVParams& params);

/// Nearest integer, halves rounded up. Input must be >= 0.
std::int64_t round_half_up(double value);

CountsGrid round_counts(const RealGrid& grid);
CountsGrid round_counts(const SimulatedGrid& simulated);

}  // namespace reservekit
