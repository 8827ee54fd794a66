#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "reservekit/error.hpp"

namespace reservekit {

/// Per-species, per-parcel counts on an n x n grid. `counts[i][p]` is the
/// count of species i at row-major parcel p.
template <typename T>
struct BasicCountsGrid {
  int n = 0;
  std::vector<std::vector<T>> counts;

  BasicCountsGrid() = default;
  BasicCountsGrid(int side, std::size_t species)
      : n(side),
        counts(species, std::vector<T>(static_cast<std::size_t>(side) * side, T{})) {}

  std::size_t parcel_count() const { return static_cast<std::size_t>(n) * n; }
  std::size_t species_count() const { return counts.size(); }

  T& at(std::size_t species, std::size_t parcel) { return counts[species][parcel]; }
  const T& at(std::size_t species, std::size_t parcel) const {
    return counts[species][parcel];
  }

  T total(std::size_t species) const {
    T sum{};
    for (const T& v : counts[species]) sum += v;
    return sum;
  }

  /// Throws if any species row does not hold exactly n*n entries.
  void validate() const {
    if (n < 1) throw Error(ErrorCode::invalid_dimension, "grid side must be >= 1");
    for (const auto& row : counts) {
      if (row.size() != parcel_count())
        throw Error(ErrorCode::length_mismatch, "species row length differs from n*n");
    }
  }

  bool operator==(const BasicCountsGrid&) const = default;
};

/// Observed (integer) counts N_i(p).
using CountsGrid = BasicCountsGrid<std::int64_t>;
/// Real-valued counts, e.g. simulation output before rounding.
using RealGrid = BasicCountsGrid<double>;

/// Stacks single-species grids (all on the same n) into one multi-species grid.
template <typename T>
BasicCountsGrid<T> stack_species(const std::vector<BasicCountsGrid<T>>& grids) {
  if (grids.empty()) throw Error(ErrorCode::invalid_argument, "no grids to stack");
  BasicCountsGrid<T> out;
  out.n = grids.front().n;
  for (const auto& g : grids) {
    if (g.n != out.n) throw Error(ErrorCode::length_mismatch, "grids differ in side length");
    for (const auto& row : g.counts) out.counts.push_back(row);
  }
  return out;
}

}  // namespace reservekit
