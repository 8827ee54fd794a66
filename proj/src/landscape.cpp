#include "reservekit/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "reservekit/random.hpp"

namespace reservekit {

std::vector<double> smooth_once(std::span<const double> values, int n) {
  std::vector<double> out(values.size());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      double sum = values[static_cast<std::size_t>(r) * n + c];
      int count = 1;
      auto add = [&](int rr, int cc) {
        if (rr < 0 || rr >= n || cc < 0 || cc >= n) return;
        sum += values[static_cast<std::size_t>(rr) * n + cc];
        ++count;
      };
      add(r - 1, c);
      add(r + 1, c);
      add(r, c - 1);
      add(r, c + 1);
      out[static_cast<std::size_t>(r) * n + c] = sum / count;
    }
  }
  return out;
}

void rescale_to_unit(std::span<double> values) {
  if (values.empty()) return;
  auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (!(hi > lo)) return;
  const double span = hi - lo;
  for (double& v : values) v = std::clamp((v - lo) / span, 0.0, 1.0);
}

Landscape generate_landscape(int n, int smoothing_rounds, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::invalid_dimension, "landscape side must be >= 1");
  if (smoothing_rounds < 0)
    throw Error(ErrorCode::invalid_argument, "smoothing_rounds must be >= 0");

  Landscape out;
  out.n = n;
  out.seed = seed;
  out.smoothing_rounds = smoothing_rounds;
  out.values.resize(out.parcel_count());

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (double& v : out.values) v = unit(rng);

  for (int i = 0; i < smoothing_rounds; ++i) out.values = smooth_once(out.values, n);
  rescale_to_unit(out.values);
  return out;
}

Landscape generate_random_landscape(int n, std::uint64_t seed) {
  std::mt19937_64 rng(derive_seed(seed, 0x726f756e6473ULL));
  std::uniform_int_distribution<int> rounds(0, kMaxRandomSmoothingRounds);
  return generate_landscape(n, rounds(rng), seed);
}

std::vector<Landscape> generate_pool(int n, std::size_t count, std::uint64_t base_seed) {
  std::vector<Landscape> pool;
  pool.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    pool.push_back(generate_random_landscape(n, base_seed + i));
  return pool;
}

FragmentationScore fragmentation(const Landscape& landscape) {
  const int n = landscape.n;
  if (n <= 1) return {0.0};
  double sum = 0.0;
  std::size_t pairs = 0;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c + 1 < n) {
        sum += std::abs(landscape.at(r, c) - landscape.at(r, c + 1));
        ++pairs;
      }
      if (r + 1 < n) {
        sum += std::abs(landscape.at(r, c) - landscape.at(r + 1, c));
        ++pairs;
      }
    }
  }
  return {sum / static_cast<double>(pairs)};
}

ExtremeSelection select_extremes(std::span<const FragmentationScore> scores, std::size_t k) {
  if (scores.size() < 2 * k) {
    throw Error(ErrorCode::insufficient_candidates,
                "need at least " + std::to_string(2 * k) + " landscapes, got " +
                    std::to_string(scores.size()));
  }
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a].value > scores[b].value;
  });

  ExtremeSelection out;
  out.most.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  out.least.assign(order.rbegin(), order.rbegin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

ExtremeSelection select_extremes(std::span<const Landscape> landscapes, std::size_t k) {
  std::vector<FragmentationScore> scores;
  scores.reserve(landscapes.size());
  for (const auto& l : landscapes) scores.push_back(fragmentation(l));
  return select_extremes(std::span<const FragmentationScore>(scores), k);
}

CountsGrid distribute_population(const Landscape& landscape, std::int64_t total,
                                 std::uint64_t seed) {
  if (landscape.n < 1) throw Error(ErrorCode::invalid_dimension, "landscape side must be >= 1");
  if (total < 0) throw Error(ErrorCode::invalid_argument, "population total must be >= 0");

  CountsGrid out(landscape.n, 1);
  if (total == 0) return out;

  const std::size_t parcels = landscape.parcel_count();
  std::vector<double> quality(parcels);
  for (std::size_t p = 0; p < parcels; ++p)
    quality[p] = std::max(0.0, 1.0 - landscape.values[p]);

  // Suffix sums give the remaining mass exactly for each conditional draw.
  std::vector<double> remaining_mass(parcels + 1, 0.0);
  for (std::size_t p = parcels; p-- > 0;)
    remaining_mass[p] = remaining_mass[p + 1] + quality[p];
  if (!(remaining_mass[0] > 0.0)) {
    throw Error(ErrorCode::degenerate_intensity,
                "every parcel has habitat value 1; cannot place individuals");
  }

  // Multinomial as a chain of conditional binomials.
  std::mt19937_64 rng(seed);
  std::int64_t left = total;
  for (std::size_t p = 0; p < parcels && left > 0; ++p) {
    if (quality[p] <= 0.0) continue;
    const bool last_positive = !(remaining_mass[p + 1] > 0.0);
    std::int64_t k = left;
    if (!last_positive) {
      const double prob = std::min(1.0, quality[p] / remaining_mass[p]);
      std::binomial_distribution<std::int64_t> draw(left, prob);
      k = draw(rng);
    }
    out.at(0, p) = k;
    left -= k;
  }
  return out;
}

}  // namespace reservekit
