#include "reservekit/experiment.hpp"

#include <algorithm>
#include <numeric>

#include "reservekit/random.hpp"

namespace reservekit {

const char* to_string(FragmentationRank rank) noexcept {
  switch (rank) {
    case FragmentationRank::highest: return "highest";
    case FragmentationRank::second_highest: return "2nd highest";
    case FragmentationRank::lowest: return "lowest";
    case FragmentationRank::second_lowest: return "2nd lowest";
  }
  return "unknown";
}

SpeciesSuite build_species_suite(std::uint64_t seed, std::size_t pool_size, int n) {
  if (pool_size < 4)
    throw Error(ErrorCode::insufficient_candidates, "pool_size must be >= 4");
  const auto pool = generate_pool(n, pool_size, seed);
  const auto extremes = select_extremes(std::span<const Landscape>(pool), 2);

  auto pick = [&](FragmentationRank rank) -> std::size_t {
    switch (rank) {
      case FragmentationRank::highest: return extremes.most[0];
      case FragmentationRank::second_highest: return extremes.most[1];
      case FragmentationRank::lowest: return extremes.least[0];
      case FragmentationRank::second_lowest: return extremes.least[1];
    }
    return 0;
  };

  SpeciesSuite suite{seed, pool_size, {}};
  const std::uint64_t population_stream = derive_seed(seed, 0x706f70756c617465ULL);
  for (std::size_t j = 0; j < std::size(kSuiteLayout); ++j) {
    SpeciesSpec spec;
    spec.id = "S" + std::to_string(j);
    spec.rank = kSuiteLayout[j].rank;
    spec.total = kSuiteLayout[j].total;
    spec.pool_index = pick(spec.rank);
    spec.landscape = pool[spec.pool_index];
    spec.counts = distribute_population(spec.landscape, spec.total,
                                        derive_seed(population_stream, j));
    suite.species.push_back(std::move(spec));
  }
  return suite;
}

std::vector<std::int64_t> default_budgets() {
  std::vector<std::int64_t> out;
  for (std::int64_t b = 0; b <= 100; b += 5) out.push_back(b);
  return out;
}

void Scenario::validate() const {
  observed.validate();
  if (species.size() != observed.species_count())
    throw Error(ErrorCode::length_mismatch, "species ids differ from observed species count");
  if (weights.size() != observed.species_count())
    throw Error(ErrorCode::length_mismatch, "weights differ from observed species count");
  if (costs.size() != observed.parcel_count())
    throw Error(ErrorCode::length_mismatch, "costs differ from parcel count");
  if (budgets.empty()) throw Error(ErrorCode::invalid_argument, "scenario has no budgets");
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    if (budgets[i] < 0) throw Error(ErrorCode::invalid_argument, "budgets must be nonnegative");
    if (i > 0 && budgets[i] <= budgets[i - 1])
      throw Error(ErrorCode::invalid_argument, "budgets must be ascending and unique");
  }
  if (lv_params.species_count() != observed.species_count())
    throw Error(ErrorCode::length_mismatch, "lv_params differ from observed species count");
  lv_params.validate();
}

Scenario make_scenario(const SpeciesSuite& suite, std::span<const std::size_t> members,
                       std::string name) {
  if (members.empty()) throw Error(ErrorCode::invalid_argument, "scenario needs species");
  Scenario s;
  s.name = std::move(name);
  std::vector<CountsGrid> grids;
  for (std::size_t m : members) {
    if (m >= suite.species.size())
      throw Error(ErrorCode::index_out_of_range, "species index out of range");
    s.species.push_back(suite.species[m].id);
    grids.push_back(suite.species[m].counts);
  }
  s.observed = stack_species(grids);
  s.weights.assign(members.size(), Rational(1));
  s.budgets = default_budgets();
  s.costs.assign(s.observed.parcel_count(), 1);
  s.lv_params = default_lv_params(members.size());
  s.seed = suite.seed;
  return s;
}

std::vector<Scenario> default_scenarios(const SpeciesSuite& suite) {
  if (suite.species.size() != 8)
    throw Error(ErrorCode::invalid_argument, "default scenarios need an 8-species suite");
  const std::vector<std::vector<std::size_t>> cases = {
      {0, 1}, {2, 3}, {4, 5}, {6, 7}, {0, 1, 2, 3, 4}, {5, 6, 7, 0, 1},
  };
  std::vector<Scenario> out;
  for (std::size_t c = 0; c < cases.size(); ++c)
    out.push_back(make_scenario(suite, cases[c], "case" + std::to_string(c + 1)));
  return out;
}

std::int64_t similarity(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::length_mismatch, "solutions cover different parcel counts");
  std::int64_t same = 0;
  for (std::size_t p = 0; p < a.size(); ++p) same += (a[p] != 0) == (b[p] != 0) ? 1 : 0;
  return same;
}

std::int64_t similarity(const ReserveSolution& a, const ReserveSolution& b) {
  return similarity(std::span<const std::uint8_t>(a.x), std::span<const std::uint8_t>(b.x));
}

CountsGrid simulated_values(const Scenario& scenario) {
  return round_counts(simulate(scenario.observed, scenario.lv_params));
}

std::vector<SweepRow> budget_sweep(const Scenario& scenario) {
  scenario.validate();
  return budget_sweep(scenario, simulated_values(scenario));
}

std::vector<SweepRow> budget_sweep(const Scenario& scenario, const CountsGrid& simulated) {
  scenario.validate();
  if (simulated.n != scenario.observed.n ||
      simulated.species_count() != scenario.observed.species_count())
    throw Error(ErrorCode::length_mismatch, "simulated grid shape differs from observed");

  ReserveProblem observed_problem{scenario.observed.counts, scenario.weights, scenario.costs, 0};
  ReserveProblem simulated_problem{simulated.counts, scenario.weights, scenario.costs, 0};

  std::vector<SweepRow> rows;
  rows.reserve(scenario.budgets.size());
  for (std::int64_t budget : scenario.budgets) {
    observed_problem.budget = budget;
    simulated_problem.budget = budget;
    auto first = solve(observed_problem);
    auto second = solve(simulated_problem);
    SweepRow row;
    row.budget = budget;
    row.similarity = similarity(first, second);
    row.objective_1 = first.objective;
    row.objective_2 = second.objective;
    row.x_1 = std::move(first.x);
    row.x_2 = std::move(second.x);
    rows.push_back(std::move(row));
  }
  return rows;
}

SimilarityStats summarize(std::span<const SweepRow> rows) {
  if (rows.size() < 3) {
    throw Error(ErrorCode::no_interior_rows,
                "need at least one budget strictly between the lowest and highest");
  }
  // Endpoints are the lowest and highest budgets, wherever they sit in `rows`.
  std::vector<const SweepRow*> sorted;
  for (const auto& r : rows) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const SweepRow* a, const SweepRow* b) { return a->budget < b->budget; });

  std::vector<std::int64_t> values;
  for (std::size_t i = 1; i + 1 < sorted.size(); ++i) values.push_back(sorted[i]->similarity);
  std::sort(values.begin(), values.end());

  SimilarityStats stats;
  stats.min = values.front();
  stats.mean = static_cast<double>(std::accumulate(values.begin(), values.end(), std::int64_t{0})) /
               static_cast<double>(values.size());
  const std::size_t mid = values.size() / 2;
  stats.median = values.size() % 2 == 1
                     ? static_cast<double>(values[mid])
                     : 0.5 * static_cast<double>(values[mid - 1] + values[mid]);
  return stats;
}

std::vector<std::vector<SweepRow>> weighted_comparison(
    const Scenario& scenario, std::span<const std::vector<Rational>> weight_sets) {
  scenario.validate();
  const CountsGrid simulated = simulated_values(scenario);
  std::vector<std::vector<SweepRow>> out;
  out.reserve(weight_sets.size());
  for (const auto& weights : weight_sets) {
    if (weights.size() != scenario.observed.species_count())
      throw Error(ErrorCode::length_mismatch, "weight set size differs from species count");
    Scenario variant = scenario;
    variant.weights = weights;
    out.push_back(budget_sweep(variant, simulated));
  }
  return out;
}

}  // namespace reservekit
