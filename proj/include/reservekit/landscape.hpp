#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "reservekit/grid.hpp"

namespace reservekit {

/// n x n habitat grid. Values live in [0,1]; higher means worse habitat.
struct Landscape {
  int n = 0;
  std::vector<double> values;  // row-major, n*n entries
  std::uint64_t seed = 0;
  int smoothing_rounds = 0;

  std::size_t parcel_count() const { return static_cast<std::size_t>(n) * n; }
  double at(int row, int col) const {
    return values[static_cast<std::size_t>(row) * n + col];
  }

  bool operator==(const Landscape&) const = default;
};

struct FragmentationScore {
  double value = 0.0;
  auto operator<=>(const FragmentationScore&) const = default;
};

/// Largest smoothing round count drawn by `generate_random_landscape`.
inline constexpr int kMaxRandomSmoothingRounds = 8;

/// One pass of 4-neighbour averaging: each parcel becomes the mean of itself
/// and its in-grid orthogonal neighbours (computed from the previous pass).
std::vector<double> smooth_once(std::span<const double> values, int n);

/// Affine map of `values` onto [0,1]. A constant grid is left untouched.
void rescale_to_unit(std::span<double> values);

/// iid U[0,1] draws, `smoothing_rounds` smoothing passes, then rescale.
/// Deterministic in (n, smoothing_rounds, seed).
Landscape generate_landscape(int n, int smoothing_rounds, std::uint64_t seed);

/// Same as generate_landscape with smoothing rounds drawn uniformly from
/// {0, ..., kMaxRandomSmoothingRounds} using a stream derived from `seed`.
Landscape generate_random_landscape(int n, std::uint64_t seed);

/// `count` random landscapes with seeds base_seed + i.
std::vector<Landscape> generate_pool(int n, std::size_t count, std::uint64_t base_seed);

/// Mean absolute difference over all orthogonally adjacent parcel pairs.
FragmentationScore fragmentation(const Landscape& landscape);

struct ExtremeSelection {
  std::vector<std::size_t> most;   // most fragmented first
  std::vector<std::size_t> least;  // least fragmented first
};

/// Ranks by score descending (stable, so earlier input wins ties) and returns
/// the first k and the last k of that ranking as disjoint index sets.
ExtremeSelection select_extremes(std::span<const FragmentationScore> scores, std::size_t k);
ExtremeSelection select_extremes(std::span<const Landscape> landscapes, std::size_t k);

/// Multinomial placement of `total` individuals with per-parcel probability
/// proportional to 1 - h(p). Returns a single-species grid summing to `total`.
CountsGrid distribute_population(const Landscape& landscape, std::int64_t total,
                                 std::uint64_t seed);

}  // namespace reservekit
