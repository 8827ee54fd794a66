#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "reservekit/dynamics.hpp"
#include "reservekit/experiment.hpp"
#include "reservekit/landscape.hpp"
#include "reservekit/render.hpp"
#include "reservekit/report.hpp"
#include "reservekit/serialization.hpp"
#include "reservekit/solver.hpp"

namespace py = pybind11;
using namespace reservekit;

namespace {

ReserveProblem make_problem_py(std::vector<std::vector<std::int64_t>> values,
                               std::vector<Rational> weights, std::vector<std::int64_t> costs,
                               std::int64_t budget) {
  ReserveProblem p{std::move(values), std::move(weights), std::move(costs), budget};
  p.validate();
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multi-species reserve selection: landscapes, competition dynamics, knapsack solvers";

  py::register_exception<Error>(m, "ReserveKitError", PyExc_ValueError);

  py::class_<Rational>(m, "Rational")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"), py::arg("den") = 1)
      .def(py::init([](const std::string& text) { return Rational::parse(text); }))
      .def_property_readonly("num", &Rational::num)
      .def_property_readonly("den", &Rational::den)
      .def("__float__", &Rational::to_double)
      .def("__str__", &Rational::to_string)
      .def("__repr__", [](const Rational& r) { return "Rational(" + r.to_string() + ")"; })
      .def(py::self == py::self)
      .def(py::self < py::self);
  py::implicitly_convertible<std::string, Rational>();
  py::implicitly_convertible<std::int64_t, Rational>();

  py::class_<Landscape>(m, "Landscape")
      .def_readonly("n", &Landscape::n)
      .def_readonly("values", &Landscape::values)
      .def_readonly("seed", &Landscape::seed)
      .def_readonly("smoothing_rounds", &Landscape::smoothing_rounds);

  py::class_<CountsGrid>(m, "CountsGrid")
      .def(py::init([](int n, std::vector<std::vector<std::int64_t>> counts) {
        CountsGrid g;
        g.n = n;
        g.counts = std::move(counts);
        g.validate();
        return g;
      }), py::arg("n"), py::arg("counts"))
      .def_readonly("n", &CountsGrid::n)
      .def_readonly("counts", &CountsGrid::counts)
      .def_property_readonly("species_count", &CountsGrid::species_count)
      .def_property_readonly("parcel_count", &CountsGrid::parcel_count);

  py::class_<RealGrid>(m, "RealGrid")
      .def_readonly("n", &RealGrid::n)
      .def_readonly("counts", &RealGrid::counts);

  py::class_<LVParams>(m, "LVParams")
      .def(py::init([](std::vector<double> r, std::vector<std::vector<double>> alpha,
                       std::vector<double> beta, double dt, std::int64_t steps) {
        LVParams p{std::move(r), std::move(alpha), std::move(beta), dt, steps};
        p.validate();
        return p;
      }), py::arg("r"), py::arg("alpha"), py::arg("beta"), py::arg("dt") = 0.01,
           py::arg("T") = 2000)
      .def_readonly("r", &LVParams::r)
      .def_readonly("alpha", &LVParams::alpha)
      .def_readonly("beta", &LVParams::beta)
      .def_readonly("dt", &LVParams::dt)
      .def_readonly("T", &LVParams::steps);

  py::class_<SimulatedGrid>(m, "SimulatedGrid")
      .def_readonly("counts", &SimulatedGrid::counts)
      .def_readonly("params", &SimulatedGrid::params);

  py::class_<ReserveProblem>(m, "ReserveProblem")
      .def(py::init(&make_problem_py), py::arg("values"), py::arg("weights"), py::arg("costs"),
           py::arg("budget"))
      .def_readonly("values", &ReserveProblem::values)
      .def_readonly("weights", &ReserveProblem::weights)
      .def_readonly("costs", &ReserveProblem::costs)
      .def_readwrite("budget", &ReserveProblem::budget);

  py::class_<ReserveSolution>(m, "ReserveSolution")
      .def_readonly("x", &ReserveSolution::x)
      .def_readonly("objective", &ReserveSolution::objective)
      .def_readonly("spent", &ReserveSolution::spent)
      .def("protected_parcels", &ReserveSolution::protected_parcels);

  py::class_<SpeciesSpec>(m, "SpeciesSpec")
      .def_readonly("id", &SpeciesSpec::id)
      .def_property_readonly("rank", [](const SpeciesSpec& s) { return std::string(to_string(s.rank)); })
      .def_readonly("total", &SpeciesSpec::total)
      .def_readonly("pool_index", &SpeciesSpec::pool_index)
      .def_readonly("landscape", &SpeciesSpec::landscape)
      .def_readonly("counts", &SpeciesSpec::counts);

  py::class_<SpeciesSuite>(m, "SpeciesSuite")
      .def_readonly("seed", &SpeciesSuite::seed)
      .def_readonly("pool_size", &SpeciesSuite::pool_size)
      .def_readonly("species", &SpeciesSuite::species);

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("name", &Scenario::name)
      .def_readonly("species", &Scenario::species)
      .def_readonly("observed", &Scenario::observed)
      .def_readwrite("weights", &Scenario::weights)
      .def_readwrite("budgets", &Scenario::budgets)
      .def_readwrite("costs", &Scenario::costs)
      .def_readwrite("lv_params", &Scenario::lv_params)
      .def_readonly("seed", &Scenario::seed)
      .def("to_json", [](const Scenario& s) { return to_json(s).dump(); })
      .def_static("from_json", [](const std::string& text) {
        return scenario_from_json(Json::parse(text), "<string>");
      });

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("budget", &SweepRow::budget)
      .def_readonly("similarity", &SweepRow::similarity)
      .def_readonly("objective_1", &SweepRow::objective_1)
      .def_readonly("objective_2", &SweepRow::objective_2)
      .def_readonly("x_1", &SweepRow::x_1)
      .def_readonly("x_2", &SweepRow::x_2);

  py::class_<SimilarityStats>(m, "SimilarityStats")
      .def_readonly("min", &SimilarityStats::min)
      .def_readonly("mean", &SimilarityStats::mean)
      .def_readonly("median", &SimilarityStats::median);

  m.def("generate_landscape", &generate_landscape, py::arg("n"), py::arg("smoothing_rounds"),
        py::arg("seed"));
  m.def("fragmentation", [](const Landscape& l) { return fragmentation(l).value; });
  m.def("select_extremes", [](const std::vector<Landscape>& ls, std::size_t k) {
    auto sel = select_extremes(std::span<const Landscape>(ls), k);
    return std::make_pair(sel.most, sel.least);
  }, py::arg("landscapes"), py::arg("k"));
  m.def("distribute_population", &distribute_population, py::arg("landscape"), py::arg("total"),
        py::arg("seed"));

  m.def("default_lv_params", &default_lv_params, py::arg("species"));
  m.def("zero_dynamics", &zero_dynamics, py::arg("species"), py::arg("T") = 2000);
  m.def("lv_step", [](const std::vector<double>& state, const LVParams& p) { return lv_step(state, p); });
  m.def("simulate", &simulate, py::arg("observed"), py::arg("params"));
  m.def("round_counts", py::overload_cast<const SimulatedGrid&>(&round_counts));

  m.def("parcel_score", &parcel_score, py::arg("problem"), py::arg("parcel"));
  m.def("solve_topk", &solve_topk);
  m.def("solve_dp", &solve_dp);
  m.def("solve_bruteforce", &solve_bruteforce);
  m.def("solve", &solve);

  m.def("build_species_suite", &build_species_suite, py::arg("seed"), py::arg("pool_size") = 10000,
        py::arg("n") = 10);
  m.def("default_scenarios", &default_scenarios);
  m.def("similarity", py::overload_cast<const ReserveSolution&, const ReserveSolution&>(&similarity));
  m.def("budget_sweep", py::overload_cast<const Scenario&>(&budget_sweep));
  m.def("summarize", [](const std::vector<SweepRow>& rows) { return summarize(rows); });
  m.def("weighted_comparison", [](const Scenario& s, const std::vector<std::vector<Rational>>& sets) {
    return weighted_comparison(s, sets);
  });
  m.def("sweep_csv", [](const std::vector<SweepRow>& rows) { return sweep_csv(rows); });

  m.def("render_pair", [](const CountsGrid& counts_1, const std::vector<std::uint8_t>& x_1,
                          const CountsGrid& counts_2, const std::vector<std::uint8_t>& x_2) {
    RenderSpec spec;
    spec.panels.push_back({"Without interaction", counts_1, x_1});
    spec.panels.push_back({"With interaction", counts_2, x_2});
    return render_grid(spec);
  });
}
