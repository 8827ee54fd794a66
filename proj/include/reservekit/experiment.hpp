#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "reservekit/dynamics.hpp"
#include "reservekit/grid.hpp"
#include "reservekit/landscape.hpp"
#include "reservekit/rational.hpp"
#include "reservekit/solver.hpp"

namespace reservekit {

enum class FragmentationRank { highest, second_highest, lowest, second_lowest };

const char* to_string(FragmentationRank rank) noexcept;

struct SpeciesSpec {
  std::string id;  // "S0" ... "S7"
  FragmentationRank rank = FragmentationRank::highest;
  std::int64_t total = 0;
  std::size_t pool_index = 0;  // position of the landscape in the generated pool
  Landscape landscape;
  CountsGrid counts;  // single-species observed grid, sums to `total`
};

struct SpeciesSuite {
  std::uint64_t seed = 0;
  std::size_t pool_size = 0;
  std::vector<SpeciesSpec> species;
};

/// Suite layout: (rank, total) for S0..S7.
struct SuiteRow {
  FragmentationRank rank;
  std::int64_t total;
};
inline constexpr SuiteRow kSuiteLayout[8] = {
    {FragmentationRank::highest, 100},        {FragmentationRank::second_highest, 100},
    {FragmentationRank::highest, 250},        {FragmentationRank::second_highest, 250},
    {FragmentationRank::lowest, 100},         {FragmentationRank::second_lowest, 100},
    {FragmentationRank::lowest, 250},         {FragmentationRank::second_lowest, 250},
};

/// Generates `pool_size` random n x n landscapes (seeds seed + i), keeps the
/// two most and two least fragmented, and places each species' population
/// on its assigned landscape.
SpeciesSuite build_species_suite(std::uint64_t seed, std::size_t pool_size = 10000, int n = 10);

/// Budgets 0, 5, ..., 100.
std::vector<std::int64_t> default_budgets();

struct Scenario {
  std::string name;
  std::vector<std::string> species;  // species ids, in value-grid order
  CountsGrid observed;               // one row per entry of `species`
  std::vector<Rational> weights;
  std::vector<std::int64_t> budgets;  // ascending, unique
  std::vector<std::int64_t> costs;    // per parcel
  LVParams lv_params;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Scenario over the suite members at `members`, with unit weights, unit
/// costs, default budgets and default dynamics.
Scenario make_scenario(const SpeciesSuite& suite, std::span<const std::size_t> members,
                       std::string name);

/// Cases 1-6: {S0,S1}, {S2,S3}, {S4,S5}, {S6,S7}, {S0..S4}, {S5,S6,S7,S0,S1}.
std::vector<Scenario> default_scenarios(const SpeciesSuite& suite);

struct SweepRow {
  std::int64_t budget = 0;
  std::int64_t similarity = 0;
  Rational objective_1;
  Rational objective_2;
  std::vector<std::uint8_t> x_1;
  std::vector<std::uint8_t> x_2;

  bool operator==(const SweepRow&) const = default;
};

struct SimilarityStats {
  std::int64_t min = 0;
  double mean = 0.0;
  double median = 0.0;
};

/// Number of parcels with the same protection status in both solutions.
std::int64_t similarity(const ReserveSolution& a, const ReserveSolution& b);
std::int64_t similarity(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

/// Rounded simulated counts used as the values of the interaction model.
CountsGrid simulated_values(const Scenario& scenario);

/// Solves both models at every budget. The simulation runs once.
std::vector<SweepRow> budget_sweep(const Scenario& scenario);

/// Same as budget_sweep with precomputed interaction-model values.
std::vector<SweepRow> budget_sweep(const Scenario& scenario, const CountsGrid& simulated);

/// min/mean/median similarity with the lowest and highest budget rows dropped.
SimilarityStats summarize(std::span<const SweepRow> rows);

/// One sweep per weight set, sharing a single simulation.
std::vector<std::vector<SweepRow>> weighted_comparison(
    const Scenario& scenario, std::span<const std::vector<Rational>> weight_sets);

}  // namespace reservekit
