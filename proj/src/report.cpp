#include "reservekit/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "reservekit/error.hpp"

namespace reservekit {
namespace {

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::int64_t parse_int(const std::string& s, std::string_view source, std::size_t line,
                       const char* column) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::parse_error, std::string(source) + ": line " + std::to_string(line) +
                                          ": column '" + column + "': not an integer: '" + s + "'");
}

}  // namespace

std::string format_mean(double mean) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", mean);
  return buf;
}

std::string format_median(double median) {
  char buf[64];
  if (median == std::floor(median))
    std::snprintf(buf, sizeof buf, "%.0f", median);
  else
    std::snprintf(buf, sizeof buf, "%.1f", median);
  return buf;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::string out = "budget,similarity,objective1,objective2\n";
  for (const auto& r : rows) {
    out += std::to_string(r.budget) + "," + std::to_string(r.similarity) + "," +
           r.objective_1.to_string() + "," + r.objective_2.to_string() + "\n";
  }
  return out;
}

std::vector<SweepRow> parse_sweep_csv(std::string_view text, std::string_view source) {
  std::vector<SweepRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line.rfind("budget,similarity", 0) != 0)
        throw Error(ErrorCode::parse_error,
                    std::string(source) + ": line 1: expected header 'budget,similarity,...'");
      continue;
    }
    if (line.empty()) continue;
    const auto cols = split(line, ',');
    if (cols.size() != 4) {
      throw Error(ErrorCode::parse_error, std::string(source) + ": line " +
                                              std::to_string(line_no) + ": expected 4 columns");
    }
    SweepRow row;
    row.budget = parse_int(cols[0], source, line_no, "budget");
    row.similarity = parse_int(cols[1], source, line_no, "similarity");
    try {
      row.objective_1 = Rational::parse(cols[2]);
      row.objective_2 = Rational::parse(cols[3]);
    } catch (const Error& e) {
      throw Error(ErrorCode::parse_error, std::string(source) + ": line " +
                                              std::to_string(line_no) + ": objective: " + e.what());
    }
    rows.push_back(std::move(row));
  }
  if (line_no == 0) throw Error(ErrorCode::parse_error, std::string(source) + ": empty file");
  return rows;
}

std::string stats_csv(std::span<const CaseStats> cases) {
  std::string out = "case,min,average,median\n";
  for (const auto& c : cases) {
    out += c.label + "," + std::to_string(c.stats.min) + "," + format_mean(c.stats.mean) + "," +
           format_median(c.stats.median) + "\n";
  }
  return out;
}

std::string similarity_series_csv(std::span<const std::string> labels,
                                  std::span<const std::vector<SweepRow>> sweeps) {
  if (labels.size() != sweeps.size())
    throw Error(ErrorCode::length_mismatch, "one label per sweep required");
  if (sweeps.empty()) throw Error(ErrorCode::invalid_argument, "no sweeps to tabulate");
  const auto& first = sweeps.front();
  for (const auto& s : sweeps) {
    if (s.size() != first.size())
      throw Error(ErrorCode::length_mismatch, "sweeps have different budget lists");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i].budget != first[i].budget)
        throw Error(ErrorCode::length_mismatch, "sweeps have different budget lists");
    }
  }
  std::string out = "budget";
  for (const auto& l : labels) out += "," + l;
  out += "\n";
  for (std::size_t i = 0; i < first.size(); ++i) {
    out += std::to_string(first[i].budget);
    for (const auto& s : sweeps) out += "," + std::to_string(s[i].similarity);
    out += "\n";
  }
  return out;
}

}  // namespace reservekit
