#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "reservekit/grid.hpp"
#include "reservekit/rational.hpp"

namespace reservekit {

/// Budget-constrained parcel selection:
///
///   maximize   sum_i w_i sum_p values_i(p) x_p
///   subject to sum_p c_p x_p <= budget,  x_p in {0,1}
struct ReserveProblem {
  std::vector<std::vector<std::int64_t>> values;  // [species][parcel]
  std::vector<Rational> weights;                  // one per species
  std::vector<std::int64_t> costs;                // one per parcel
  std::int64_t budget = 0;

  std::size_t species_count() const { return values.size(); }
  std::size_t parcel_count() const { return costs.size(); }

  void validate() const;
};

/// Problem over a counts grid with the given weights and costs.
ReserveProblem make_problem(const CountsGrid& counts, std::vector<Rational> weights,
                            std::vector<std::int64_t> costs, std::int64_t budget);

/// Problem with unit costs and unit weights.
ReserveProblem make_unit_problem(const CountsGrid& counts, std::int64_t budget);

struct ReserveSolution {
  std::vector<std::uint8_t> x;
  Rational objective;
  std::int64_t spent = 0;

  std::vector<std::size_t> protected_parcels() const;
  bool operator==(const ReserveSolution&) const = default;
};

/// Converts real-valued costs to integers; throws non_integer_cost if any cost
/// has a fractional part (rescale costs to integer units first).
std::vector<std::int64_t> integer_costs(std::span<const double> costs);

/// sum_i w_i values_i(p).
Rational parcel_score(const ReserveProblem& problem, std::size_t parcel);

/// Objective and spent cost of an arbitrary decision vector.
ReserveSolution evaluate(const ReserveProblem& problem, std::vector<std::uint8_t> x);

/// Unit-cost fast path: the min(budget, |P|) highest scores, lower index
/// first among equal scores. Throws wrong_solver unless every cost is 1.
ReserveSolution solve_topk(const ReserveProblem& problem);

/// Exact 0/1 knapsack by dynamic programming over integer budgets. Among
/// optimal reserves it returns the one that is lexicographically greatest
/// when x_0 is the most significant position (protect lower indices first).
ReserveSolution solve_dp(const ReserveProblem& problem);

/// Largest parcel count accepted by solve_bruteforce.
inline constexpr std::size_t kBruteForceMaxParcels = 20;

/// Exhaustive enumeration with the same tie-break as solve_dp. Test oracle.
ReserveSolution solve_bruteforce(const ReserveProblem& problem);

/// solve_topk when all costs are 1, solve_dp otherwise.
ReserveSolution solve(const ReserveProblem& problem);

}  // namespace reservekit
