// reservekit command-line front end.
//
//   reservekit generate --seed S --out DIR [--pool 10000] [--n 10]
//   reservekit simulate (--counts FILE | --scenario FILE) [--params FILE] --out FILE
//   reservekit solve    (--problem FILE | --counts FILE | --scenario FILE --model 1|2)
//                       [--budget B] [--weights W,...] --out FILE
//   reservekit sweep    --scenario FILE [--weights W,...] --out FILE.csv
//   reservekit render   --counts FILE --solution FILE [--counts2 FILE --solution2 FILE] --out FILE.svg
//   reservekit report   --sweep FILE... [--label L...] --out FILE.csv [--plot FILE.csv]

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "reservekit/dynamics.hpp"
#include "reservekit/experiment.hpp"
#include "reservekit/render.hpp"
#include "reservekit/report.hpp"
#include "reservekit/serialization.hpp"
#include "reservekit/solver.hpp"

namespace fs = std::filesystem;
using namespace reservekit;

namespace {

std::vector<Rational> parse_weights(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Integer counts from either an observed grid or a real-valued simulated grid.
CountsGrid load_counts(const fs::path& path) {
  const Json j = read_json_file(path);
  return round_counts(real_grid_from_json(j, path.string()));
}

int run_generate(std::uint64_t seed, std::size_t pool, int n, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  const auto suite = build_species_suite(seed, pool, n);
  write_json_file(out_dir / "suite.json", to_json(suite));
  for (const auto& sp : suite.species) write_json_file(out_dir / (sp.id + ".json"), to_json(sp.counts));
  for (const auto& scenario : default_scenarios(suite)) {
    write_json_file(out_dir / (scenario.name + ".json"), to_json(scenario));
    write_json_file(out_dir / (scenario.name + "_counts.json"), to_json(scenario.observed));
  }
  std::cout << "generated " << suite.species.size() << " species and 6 scenarios in "
            << out_dir.string() << "\n";
  return 0;
}

int run_simulate(const std::string& counts_path, const std::string& scenario_path,
                 const std::string& params_path, const fs::path& out,
                 const std::string& rounded_out) {
  CountsGrid observed;
  std::optional<LVParams> params;
  if (!scenario_path.empty()) {
    const auto scenario = scenario_from_json(read_json_file(scenario_path), scenario_path);
    observed = scenario.observed;
    params = scenario.lv_params;
  } else {
    observed = counts_from_json(read_json_file(counts_path), counts_path);
  }
  if (!params_path.empty()) params = lv_params_from_json(read_json_file(params_path), params_path);
  if (!params) params = default_lv_params(observed.species_count());

  const auto simulated = simulate(observed, *params);
  write_json_file(out, to_json(simulated));
  if (!rounded_out.empty()) write_json_file(rounded_out, to_json(round_counts(simulated)));
  return 0;
}

int run_solve(const std::string& problem_path, const std::string& counts_path,
              const std::string& scenario_path, int model, std::optional<std::int64_t> budget,
              const std::string& weights, const fs::path& out) {
  ReserveProblem problem;
  if (!problem_path.empty()) {
    problem = problem_from_json(read_json_file(problem_path), problem_path);
  } else if (!scenario_path.empty()) {
    const auto scenario = scenario_from_json(read_json_file(scenario_path), scenario_path);
    const CountsGrid values = model == 2 ? simulated_values(scenario) : scenario.observed;
    problem = ReserveProblem{values.counts, scenario.weights, scenario.costs, 0};
  } else {
    problem = make_unit_problem(load_counts(counts_path), 0);
  }
  if (budget) problem.budget = *budget;
  if (!weights.empty()) problem.weights = parse_weights(weights);
  problem.validate();

  const auto solution = solve(problem);
  write_json_file(out, to_json(solution));
  std::cout << "protected " << solution.protected_parcels().size() << " of "
            << problem.parcel_count() << " parcels, objective " << solution.objective.to_string()
            << ", spent " << solution.spent << "\n";
  return 0;
}

int run_sweep(const std::string& scenario_path, const std::string& weights, const fs::path& out) {
  auto scenario = scenario_from_json(read_json_file(scenario_path), scenario_path);
  if (!weights.empty()) {
    scenario.weights = parse_weights(weights);
    scenario.validate();
  }
  const auto rows = budget_sweep(scenario);
  write_file_atomic(out, sweep_csv(rows));
  if (rows.size() >= 3) {
    const auto stats = summarize(rows);
    std::cout << scenario.name << ": min " << stats.min << ", average " << format_mean(stats.mean)
              << ", median " << format_median(stats.median) << "\n";
  }
  return 0;
}

int run_render(const std::string& counts_path, const std::string& solution_path,
               const std::string& counts2_path, const std::string& solution2_path,
               const std::string& title1, const std::string& title2, const fs::path& out) {
  RenderSpec spec;
  auto panel = [](const std::string& cpath, const std::string& spath, const std::string& title) {
    RenderPanel p;
    p.title = title;
    p.annotations = load_counts(cpath);
    p.x = solution_from_json(read_json_file(spath), spath).x;
    if (p.x.size() != p.annotations.parcel_count()) {
      throw Error(ErrorCode::parse_error,
                  spath + ": field 'x': length differs from the parcel count of " + cpath);
    }
    return p;
  };
  spec.panels.push_back(panel(counts_path, solution_path, title1));
  if (!solution2_path.empty()) {
    spec.panels.push_back(
        panel(counts2_path.empty() ? counts_path : counts2_path, solution2_path, title2));
  }
  write_file_atomic(out, render_grid(spec));
  if (spec.panels.size() == 2) std::cout << similarity_caption(spec) << "\n";
  return 0;
}

int run_report(const std::vector<std::string>& sweeps, std::vector<std::string> labels,
               const fs::path& out, const std::string& plot) {
  if (!labels.empty() && labels.size() != sweeps.size())
    throw Error(ErrorCode::invalid_argument, "give one --label per --sweep");
  if (labels.empty()) {
    for (std::size_t i = 0; i < sweeps.size(); ++i) labels.push_back(std::to_string(i + 1));
  }
  std::vector<std::vector<SweepRow>> all;
  std::vector<CaseStats> stats;
  for (std::size_t i = 0; i < sweeps.size(); ++i) {
    all.push_back(parse_sweep_csv(read_text(sweeps[i]), sweeps[i]));
    stats.push_back({labels[i], summarize(all.back())});
  }
  write_file_atomic(out, stats_csv(stats));
  if (!plot.empty()) write_file_atomic(plot, similarity_series_csv(labels, all));
  std::cout << stats_csv(stats);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-species reserve selection toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::size_t pool = 10000;
  int n = 10;
  std::string out, counts, counts2, scenario, params, problem, solution, solution2, weights,
      rounded, plot, title1 = "Without interaction", title2 = "With interaction";
  std::int64_t budget_value = 0;
  int model = 1;
  std::vector<std::string> sweeps, labels;

  auto* gen = app.add_subcommand("generate", "Generate landscapes, the species suite and scenarios");
  gen->add_option("--seed", seed, "Base seed")->required();
  gen->add_option("--pool", pool, "Number of candidate landscapes")->check(CLI::Range(4, 100000000));
  gen->add_option("--n", n, "Grid side length")->check(CLI::Range(1, 10000));
  gen->add_option("--out", out, "Output directory")->required();

  auto* sim = app.add_subcommand("simulate", "Run the competition dynamics on a counts file");
  auto* sim_counts = sim->add_option("--counts", counts, "Observed counts JSON");
  auto* sim_scen = sim->add_option("--scenario", scenario, "Scenario JSON");
  sim_counts->excludes(sim_scen);
  sim->add_option("--params", params, "LV parameter JSON");
  sim->add_option("--out", out, "Simulated grid JSON")->required();
  sim->add_option("--rounded", rounded, "Also write rounded integer counts here");

  auto* sol = app.add_subcommand("solve", "Solve one reserve-selection problem");
  auto* sol_problem = sol->add_option("--problem", problem, "Problem JSON");
  auto* sol_counts = sol->add_option("--counts", counts, "Counts JSON (unit weights and costs)");
  auto* sol_scen = sol->add_option("--scenario", scenario, "Scenario JSON");
  sol_problem->excludes(sol_counts)->excludes(sol_scen);
  sol_counts->excludes(sol_scen);
  sol->add_option("--model", model, "1: observed counts, 2: simulated counts")
      ->check(CLI::IsMember({1, 2}));
  auto* sol_budget = sol->add_option("--budget", budget_value, "Budget")->check(CLI::NonNegativeNumber);
  sol->add_option("--weights", weights, "Comma-separated species weights, e.g. 0.9,0.1");
  sol->add_option("--out", out, "Solution JSON")->required();

  auto* sw = app.add_subcommand("sweep", "Budget sweep comparing both models");
  sw->add_option("--scenario", scenario, "Scenario JSON")->required();
  sw->add_option("--weights", weights, "Override scenario weights, e.g. 0.9,0.1");
  sw->add_option("--out", out, "Sweep CSV")->required();

  auto* ren = app.add_subcommand("render", "Render solutions as an SVG grid map");
  ren->add_option("--counts", counts, "Counts JSON annotating the first panel")->required();
  ren->add_option("--solution", solution, "Solution JSON for the first panel")->required();
  ren->add_option("--counts2", counts2, "Counts JSON for the second panel");
  ren->add_option("--solution2", solution2, "Solution JSON for the second panel");
  ren->add_option("--title1", title1, "First panel title");
  ren->add_option("--title2", title2, "Second panel title");
  ren->add_option("--out", out, "SVG output")->required();

  auto* rep = app.add_subcommand("report", "Summarize sweep CSVs");
  rep->add_option("--sweep", sweeps, "Sweep CSV (repeatable)")->required();
  rep->add_option("--label", labels, "Case label per sweep");
  rep->add_option("--out", out, "Stats CSV")->required();
  rep->add_option("--plot", plot, "Similarity-vs-budget series CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) return run_generate(seed, pool, n, out);
    if (*sim) {
      if (counts.empty() && scenario.empty()) {
        std::cerr << "simulate: one of --counts or --scenario is required\n";
        return 2;
      }
      return run_simulate(counts, scenario, params, out, rounded);
    }
    if (*sol) {
      if (problem.empty() && counts.empty() && scenario.empty()) {
        std::cerr << "solve: one of --problem, --counts or --scenario is required\n";
        return 2;
      }
      if (problem.empty() && !*sol_budget) {
        std::cerr << "solve: --budget is required unless --problem supplies one\n";
        return 2;
      }
      std::optional<std::int64_t> budget;
      if (*sol_budget) budget = budget_value;
      return run_solve(problem, counts, scenario, model, budget, weights, out);
    }
    if (*sw) return run_sweep(scenario, weights, out);
    if (*ren) return run_render(counts, solution, counts2, solution2, title1, title2, out);
    if (*rep) return run_report(sweeps, labels, out, plot);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
