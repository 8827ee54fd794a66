#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "reservekit/dynamics.hpp"
#include "reservekit/experiment.hpp"
#include "reservekit/grid.hpp"
#include "reservekit/landscape.hpp"
#include "reservekit/solver.hpp"

namespace reservekit {

using Json = nlohmann::json;

// Encoders. Layouts:
//   Landscape       {"n", "values", "seed", "smoothing_rounds"}
//   CountsGrid      {"n", "species", "counts": [[row-major per species], ...]}
//   LVParams        {"r", "alpha", "beta", "dt", "T"}
//   SimulatedGrid   CountsGrid layout with real entries, plus "params"
//   ReserveProblem  {"values", "weights": [[num, den], ...], "costs", "budget"}
//   ReserveSolution {"x", "objective": [num, den], "spent"}
Json to_json(const Landscape& landscape);
Json to_json(const CountsGrid& grid);
Json to_json(const RealGrid& grid);
Json to_json(const LVParams& params);
Json to_json(const SimulatedGrid& simulated);
Json to_json(const Rational& value);
Json to_json(const ReserveProblem& problem);
Json to_json(const ReserveSolution& solution);
Json to_json(const Scenario& scenario);
Json to_json(const SpeciesSuite& suite);

// Decoders. `source` names the file (or other origin) in error messages,
// which take the form "<source>: field '<path>': <problem>".
Landscape landscape_from_json(const Json& j, std::string_view source);
CountsGrid counts_from_json(const Json& j, std::string_view source);
/// Accepts integer or real entries.
RealGrid real_grid_from_json(const Json& j, std::string_view source);
LVParams lv_params_from_json(const Json& j, std::string_view source);
SimulatedGrid simulated_from_json(const Json& j, std::string_view source);
Rational rational_from_json(const Json& j, std::string_view source, std::string_view field);
ReserveProblem problem_from_json(const Json& j, std::string_view source);
ReserveSolution solution_from_json(const Json& j, std::string_view source);
Scenario scenario_from_json(const Json& j, std::string_view source);

Json read_json_file(const std::filesystem::path& path);

/// Writes via a temporary sibling file and rename, so readers never observe
/// a partially written file.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace reservekit
