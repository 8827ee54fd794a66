#include "reservekit/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace reservekit {
namespace {

// Integer parcel scores after clearing the weight denominators: the true
// score of parcel p is scores[p] / scale.
struct ScaledScores {
  std::vector<std::int64_t> scores;
  std::int64_t scale = 1;
};

ScaledScores scaled_scores(const ReserveProblem& problem) {
  ScaledScores out;
  for (const auto& w : problem.weights) out.scale = std::lcm(out.scale, w.den());
  if (out.scale <= 0) throw Error(ErrorCode::invalid_argument, "weight denominators overflow");

  std::vector<std::int64_t> int_weights;
  int_weights.reserve(problem.weights.size());
  for (const auto& w : problem.weights)
    int_weights.push_back(checked_mul(w.num(), out.scale / w.den()));

  out.scores.assign(problem.parcel_count(), 0);
  for (std::size_t i = 0; i < problem.species_count(); ++i) {
    for (std::size_t p = 0; p < problem.parcel_count(); ++p) {
      out.scores[p] =
          checked_add(out.scores[p], checked_mul(int_weights[i], problem.values[i][p]));
    }
  }
  return out;
}

ReserveSolution finish(const ReserveProblem& problem, const ScaledScores& scaled,
                       std::vector<std::uint8_t> x) {
  std::int64_t total = 0;
  std::int64_t spent = 0;
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (!x[p]) continue;
    total = checked_add(total, scaled.scores[p]);
    spent = checked_add(spent, problem.costs[p]);
  }
  return ReserveSolution{std::move(x), Rational(total, scaled.scale), spent};
}

}  // namespace

void ReserveProblem::validate() const {
  if (weights.size() != values.size()) {
    throw Error(ErrorCode::length_mismatch,
                "weights has " + std::to_string(weights.size()) + " entries but values has " +
                    std::to_string(values.size()) + " species");
  }
  for (const auto& row : values) {
    if (row.size() != costs.size())
      throw Error(ErrorCode::length_mismatch, "values row length differs from costs length");
    for (auto v : row) {
      if (v < 0) throw Error(ErrorCode::invalid_argument, "values must be nonnegative");
    }
  }
  for (const auto& w : weights) {
    if (w.num() < 0) throw Error(ErrorCode::invalid_argument, "weights must be nonnegative");
  }
  for (auto c : costs) {
    if (c < 0) throw Error(ErrorCode::invalid_argument, "costs must be nonnegative");
  }
  if (budget < 0) throw Error(ErrorCode::invalid_argument, "budget must be nonnegative");
}

ReserveProblem make_problem(const CountsGrid& counts, std::vector<Rational> weights,
                            std::vector<std::int64_t> costs, std::int64_t budget) {
  ReserveProblem problem{counts.counts, std::move(weights), std::move(costs), budget};
  problem.validate();
  return problem;
}

ReserveProblem make_unit_problem(const CountsGrid& counts, std::int64_t budget) {
  return make_problem(counts, std::vector<Rational>(counts.species_count(), Rational(1)),
                      std::vector<std::int64_t>(counts.parcel_count(), 1), budget);
}

std::vector<std::size_t> ReserveSolution::protected_parcels() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x[p]) out.push_back(p);
  }
  return out;
}

std::vector<std::int64_t> integer_costs(std::span<const double> costs) {
  std::vector<std::int64_t> out;
  out.reserve(costs.size());
  for (std::size_t p = 0; p < costs.size(); ++p) {
    const double c = costs[p];
    if (!std::isfinite(c) || c != std::floor(c) ||
        std::abs(c) > static_cast<double>(std::numeric_limits<std::int64_t>::max() / 2)) {
      throw Error(ErrorCode::non_integer_cost,
                  "cost of parcel " + std::to_string(p) +
                      " is not an integer; rescale costs (and budget) to integer units");
    }
    out.push_back(static_cast<std::int64_t>(c));
  }
  return out;
}

Rational parcel_score(const ReserveProblem& problem, std::size_t parcel) {
  if (parcel >= problem.parcel_count()) {
    throw Error(ErrorCode::index_out_of_range,
                "parcel " + std::to_string(parcel) + " out of range (" +
                    std::to_string(problem.parcel_count()) + " parcels)");
  }
  Rational sum;
  for (std::size_t i = 0; i < problem.species_count(); ++i)
    sum = sum + problem.weights[i] * Rational(problem.values[i][parcel]);
  return sum;
}

ReserveSolution evaluate(const ReserveProblem& problem, std::vector<std::uint8_t> x) {
  problem.validate();
  if (x.size() != problem.parcel_count())
    throw Error(ErrorCode::length_mismatch, "decision vector length differs from parcel count");
  return finish(problem, scaled_scores(problem), std::move(x));
}

ReserveSolution solve_topk(const ReserveProblem& problem) {
  problem.validate();
  if (!std::all_of(problem.costs.begin(), problem.costs.end(), [](auto c) { return c == 1; }))
    throw Error(ErrorCode::wrong_solver, "solve_topk requires every parcel cost to be 1");

  const auto scaled = scaled_scores(problem);
  const std::size_t parcels = problem.parcel_count();
  std::vector<std::size_t> order(parcels);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scaled.scores[a] > scaled.scores[b];
  });

  const auto take = static_cast<std::size_t>(
      std::min<std::int64_t>(problem.budget, static_cast<std::int64_t>(parcels)));
  std::vector<std::uint8_t> x(parcels, 0);
  for (std::size_t k = 0; k < take; ++k) x[order[k]] = 1;
  return finish(problem, scaled, std::move(x));
}

ReserveSolution solve_dp(const ReserveProblem& problem) {
  problem.validate();
  const auto scaled = scaled_scores(problem);
  const std::size_t parcels = problem.parcel_count();

  std::int64_t total_cost = 0;
  // Bounds every table entry, so the sums below cannot overflow.
  [[maybe_unused]] std::int64_t total_score = 0;
  for (std::size_t p = 0; p < parcels; ++p) {
    total_cost = checked_add(total_cost, problem.costs[p]);
    total_score = checked_add(total_score, scaled.scores[p]);
  }
  const auto cap = static_cast<std::size_t>(std::min(problem.budget, total_cost));
  const std::size_t width = cap + 1;

  // best[i * width + b]: optimum over parcels i..end with budget b.
  std::vector<std::int64_t> best((parcels + 1) * width, 0);
  for (std::size_t i = parcels; i-- > 0;) {
    const auto cost = static_cast<std::size_t>(problem.costs[i]);
    const std::int64_t score = scaled.scores[i];
    const std::int64_t* next = &best[(i + 1) * width];
    std::int64_t* row = &best[i * width];
    for (std::size_t b = 0; b < width; ++b) {
      row[b] = next[b];
      if (cost <= b) row[b] = std::max(row[b], score + next[b - cost]);
    }
  }

  // Forward traceback, taking parcel i whenever the suffix optimum allows it.
  std::vector<std::uint8_t> x(parcels, 0);
  std::size_t b = cap;
  for (std::size_t i = 0; i < parcels; ++i) {
    const auto cost = static_cast<std::size_t>(problem.costs[i]);
    if (cost <= b &&
        scaled.scores[i] + best[(i + 1) * width + (b - cost)] == best[i * width + b]) {
      x[i] = 1;
      b -= cost;
    }
  }
  return finish(problem, scaled, std::move(x));
}

ReserveSolution solve_bruteforce(const ReserveProblem& problem) {
  problem.validate();
  const std::size_t parcels = problem.parcel_count();
  if (parcels > kBruteForceMaxParcels) {
    throw Error(ErrorCode::too_many_parcels,
                "brute force refuses " + std::to_string(parcels) + " parcels (limit " +
                    std::to_string(kBruteForceMaxParcels) + ")");
  }
  const auto scaled = scaled_scores(problem);

  // Parcel p maps to bit (parcels - 1 - p), so a numerically larger mask is
  // lexicographically greater with x_0 most significant.
  std::uint64_t best_mask = 0;
  std::int64_t best_score = -1;
  const std::uint64_t limit = std::uint64_t{1} << parcels;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::int64_t cost = 0;
    std::int64_t score = 0;
    for (std::size_t p = 0; p < parcels; ++p) {
      if (mask >> (parcels - 1 - p) & 1U) {
        cost += problem.costs[p];
        score += scaled.scores[p];
      }
    }
    if (cost <= problem.budget && score >= best_score) {
      best_score = score;
      best_mask = mask;
    }
  }

  std::vector<std::uint8_t> x(parcels, 0);
  for (std::size_t p = 0; p < parcels; ++p) x[p] = (best_mask >> (parcels - 1 - p)) & 1U;
  return finish(problem, scaled, std::move(x));
}

ReserveSolution solve(const ReserveProblem& problem) {
  if (std::all_of(problem.costs.begin(), problem.costs.end(), [](auto c) { return c == 1; }))
    return solve_topk(problem);
  return solve_dp(problem);
}

}  // namespace reservekit
