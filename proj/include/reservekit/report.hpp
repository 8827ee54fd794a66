#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reservekit/experiment.hpp"

namespace reservekit {

/// Header: budget,similarity,objective1,objective2. Objectives are written
/// exactly, as "num/den" or a plain integer.
std::string sweep_csv(std::span<const SweepRow> rows);

/// Parses sweep_csv output. Solution vectors are not part of the CSV and come
/// back empty.
std::vector<SweepRow> parse_sweep_csv(std::string_view text, std::string_view source);

struct CaseStats {
  std::string label;
  SimilarityStats stats;
};

/// Header: case,min,average,median. Average is printed with two decimals.
std::string stats_csv(std::span<const CaseStats> cases);

/// Similarity-vs-budget series, one column per labelled sweep. Sweeps must
/// share the same budget list.
std::string similarity_series_csv(std::span<const std::string> labels,
                                  std::span<const std::vector<SweepRow>> sweeps);

std::string format_mean(double mean);
std::string format_median(double median);

}  // namespace reservekit
