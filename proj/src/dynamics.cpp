#include "reservekit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace reservekit {
namespace {

// In-place step using `scratch` for the pre-step state.
void step_in_place(std::span<double> state, std::span<double> scratch, const LVParams& params) {
  std::copy(state.begin(), state.end(), scratch.begin());
  const std::size_t k = state.size();
  for (std::size_t i = 0; i < k; ++i) {
    const double ni = scratch[i];
    double pressure = params.beta[i] * ni;
    const auto& row = params.alpha[i];
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i) pressure += row[j] * scratch[j];
    }
    const double delta = params.dt * ni * (params.r[i] - pressure);
    state[i] = std::max(0.0, ni + delta);
  }
}

}  // namespace

void LVParams::validate() const {
  const std::size_t k = r.size();
  if (beta.size() != k || alpha.size() != k)
    throw Error(ErrorCode::length_mismatch, "r, alpha and beta must have one entry per species");
  for (std::size_t i = 0; i < k; ++i) {
    if (alpha[i].size() != k)
      throw Error(ErrorCode::length_mismatch, "alpha must be square");
    if (r[i] < 0.0 || beta[i] < 0.0)
      throw Error(ErrorCode::invalid_argument, "rates must be nonnegative");
    for (std::size_t j = 0; j < k; ++j) {
      if (alpha[i][j] < 0.0)
        throw Error(ErrorCode::invalid_argument, "alpha entries must be nonnegative");
    }
    if (alpha[i][i] != 0.0)
      throw Error(ErrorCode::invalid_argument,
                  "alpha diagonal must be zero (self-limitation lives in beta)");
  }
  if (!(dt > 0.0)) throw Error(ErrorCode::invalid_argument, "dt must be positive");
  if (steps < 0) throw Error(ErrorCode::invalid_argument, "step count T must be >= 0");
}

LVParams default_lv_params(std::size_t species) {
  LVParams p;
  p.r.assign(species, 0.1);
  p.beta.assign(species, 0.001);
  p.alpha.assign(species, std::vector<double>(species, 0.0005));
  for (std::size_t i = 0; i < species; ++i) p.alpha[i][i] = 0.0;
  return p;
}

LVParams zero_dynamics(std::size_t species, std::int64_t steps) {
  LVParams p;
  p.r.assign(species, 0.0);
  p.beta.assign(species, 0.0);
  p.alpha.assign(species, std::vector<double>(species, 0.0));
  p.steps = steps;
  return p;
}

std::vector<double> lv_step(std::span<const double> state, const LVParams& params) {
  if (state.size() != params.species_count())
    throw Error(ErrorCode::length_mismatch, "state size differs from species count");
  std::vector<double> next(state.begin(), state.end());
  std::vector<double> scratch(state.size());
  step_in_place(next, scratch, params);
  return next;
}

std::vector<double> simulate_parcel(std::span<const double> initial, const LVParams& params) {
  if (initial.size() != params.species_count())
    throw Error(ErrorCode::length_mismatch, "state size differs from species count");
  std::vector<double> state(initial.begin(), initial.end());
  std::vector<double> scratch(state.size());
  for (std::int64_t t = 0; t < params.steps; ++t) step_in_place(state, scratch, params);
  return state;
}

SimulatedGrid simulate(const CountsGrid& observed, const LVParams& params) {
  observed.validate();
  params.validate();
  const std::size_t k = observed.species_count();
  if (k != params.species_count()) {
    throw Error(ErrorCode::length_mismatch,
                "counts have " + std::to_string(k) + " species but params have " +
                    std::to_string(params.species_count()));
  }

  SimulatedGrid out{RealGrid(observed.n, k), params};
  std::vector<double> parcel(k);
  for (std::size_t p = 0; p < observed.parcel_count(); ++p) {
    for (std::size_t i = 0; i < k; ++i) {
      if (observed.at(i, p) < 0)
        throw Error(ErrorCode::invalid_argument, "observed counts must be nonnegative");
      parcel[i] = static_cast<double>(observed.at(i, p));
    }
    const auto final_state = simulate_parcel(parcel, params);
    for (std::size_t i = 0; i < k; ++i) out.counts.at(i, p) = final_state[i];
  }
  return out;
}

std::int64_t round_half_up(double value) {
  if (!(value >= 0.0)) throw Error(ErrorCode::invalid_argument, "cannot round a negative count");
  const double whole = std::floor(value);
  const auto base = static_cast<std::int64_t>(whole);
  return value - whole >= 0.5 ? base + 1 : base;
}

CountsGrid round_counts(const RealGrid& grid) {
  CountsGrid out(grid.n, grid.species_count());
  for (std::size_t i = 0; i < grid.species_count(); ++i) {
    for (std::size_t p = 0; p < grid.parcel_count(); ++p)
      out.at(i, p) = round_half_up(grid.at(i, p));
  }
  return out;
}

CountsGrid round_counts(const SimulatedGrid& simulated) { return round_counts(simulated.counts); }

}  // namespace reservekit
