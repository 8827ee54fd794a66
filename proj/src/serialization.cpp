#include "reservekit/serialization.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace reservekit {
namespace {

[[noreturn]] void fail(std::string_view source, std::string_view field, std::string_view what,
                       ErrorCode code = ErrorCode::parse_error) {
  throw Error(code, std::string(source) + ": field '" + std::string(field) + "': " +
                        std::string(what));
}

const Json& member(const Json& j, std::string_view source, std::string_view parent,
                   const char* key) {
  const std::string field = parent.empty() ? key : std::string(parent) + "." + key;
  if (!j.is_object()) fail(source, parent.empty() ? "<root>" : parent, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(source, field, "missing");
  return *it;
}

std::string join(std::string_view parent, std::string_view key) {
  return parent.empty() ? std::string(key) : std::string(parent) + "." + std::string(key);
}

std::string index_field(std::string_view field, std::size_t i) {
  return std::string(field) + "[" + std::to_string(i) + "]";
}

std::int64_t as_int(const Json& j, std::string_view source, std::string_view field) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 9.0e15)
      return static_cast<std::int64_t>(v);
    fail(source, field, "expected an integer, got " + j.dump());
  }
  fail(source, field, "expected an integer");
}

std::uint64_t as_u64(const Json& j, std::string_view source, std::string_view field) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  fail(source, field, "expected a nonnegative integer");
}

double as_double(const Json& j, std::string_view source, std::string_view field) {
  if (!j.is_number()) fail(source, field, "expected a number");
  return j.get<double>();
}

const Json& as_array(const Json& j, std::string_view source, std::string_view field) {
  if (!j.is_array()) fail(source, field, "expected an array");
  return j;
}

template <typename T, typename F>
std::vector<T> array_of(const Json& j, std::string_view source, std::string_view field, F&& conv) {
  as_array(j, source, field);
  std::vector<T> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(conv(j[i], source, index_field(field, i)));
  return out;
}

std::vector<std::int64_t> int_array(const Json& j, std::string_view source, std::string_view field) {
  return array_of<std::int64_t>(j, source, field, as_int);
}

std::vector<double> double_array(const Json& j, std::string_view source, std::string_view field) {
  return array_of<double>(j, source, field, as_double);
}

template <typename T, typename F>
BasicCountsGrid<T> grid_from_json(const Json& j, std::string_view source, std::string_view parent,
                                  F&& conv) {
  BasicCountsGrid<T> g;
  g.n = static_cast<int>(as_int(member(j, source, parent, "n"), source, join(parent, "n")));
  if (g.n < 1) fail(source, join(parent, "n"), "must be >= 1");
  const auto species = as_int(member(j, source, parent, "species"), source, join(parent, "species"));
  const auto field = join(parent, "counts");
  const Json& rows = as_array(member(j, source, parent, "counts"), source, field);
  if (static_cast<std::int64_t>(rows.size()) != species)
    fail(source, field, "has " + std::to_string(rows.size()) + " rows but species = " +
                            std::to_string(species));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto row_field = index_field(field, i);
    auto row = array_of<T>(rows[i], source, row_field, conv);
    if (row.size() != g.parcel_count())
      fail(source, row_field, "expected " + std::to_string(g.parcel_count()) + " entries");
    for (std::size_t p = 0; p < row.size(); ++p) {
      if (row[p] < T{}) fail(source, index_field(row_field, p), "counts must be nonnegative");
    }
    g.counts.push_back(std::move(row));
  }
  return g;
}

LVParams lv_params_at(const Json& j, std::string_view source, std::string_view parent) {
  LVParams p;
  p.r = double_array(member(j, source, parent, "r"), source, join(parent, "r"));
  p.beta = double_array(member(j, source, parent, "beta"), source, join(parent, "beta"));
  const auto alpha_field = join(parent, "alpha");
  const Json& alpha = as_array(member(j, source, parent, "alpha"), source, alpha_field);
  for (std::size_t i = 0; i < alpha.size(); ++i)
    p.alpha.push_back(double_array(alpha[i], source, index_field(alpha_field, i)));
  p.dt = as_double(member(j, source, parent, "dt"), source, join(parent, "dt"));
  p.steps = as_int(member(j, source, parent, "T"), source, join(parent, "T"));
  try {
    p.validate();
  } catch (const Error& e) {
    fail(source, parent.empty() ? "<root>" : parent, e.what());
  }
  return p;
}

std::vector<Rational> weights_at(const Json& j, std::string_view source, std::string_view field) {
  return array_of<Rational>(j, source, field, [](const Json& w, std::string_view src,
                                                 std::string_view f) {
    return rational_from_json(w, src, f);
  });
}

std::vector<std::int64_t> costs_at(const Json& j, std::string_view source, std::string_view field) {
  as_array(j, source, field);
  std::vector<std::int64_t> out;
  for (std::size_t p = 0; p < j.size(); ++p) {
    const auto f = index_field(field, p);
    if (!j[p].is_number()) fail(source, f, "expected a number");
    const double v = j[p].get<double>();
    if (j[p].is_number_float() && v != std::floor(v))
      fail(source, f, "cost is not an integer; rescale costs and budget to integer units",
           ErrorCode::non_integer_cost);
    out.push_back(as_int(j[p], source, f));
  }
  return out;
}

Json grid_json(int n, std::size_t species, const Json& counts) {
  return Json{{"n", n}, {"species", species}, {"counts", counts}};
}

}  // namespace

Json to_json(const Landscape& l) {
  return Json{{"n", l.n}, {"values", l.values}, {"seed", l.seed},
              {"smoothing_rounds", l.smoothing_rounds}};
}

Json to_json(const CountsGrid& g) { return grid_json(g.n, g.species_count(), g.counts); }
Json to_json(const RealGrid& g) { return grid_json(g.n, g.species_count(), g.counts); }

Json to_json(const LVParams& p) {
  return Json{{"r", p.r}, {"alpha", p.alpha}, {"beta", p.beta}, {"dt", p.dt}, {"T", p.steps}};
}

Json to_json(const SimulatedGrid& s) {
  Json j = to_json(s.counts);
  j["params"] = to_json(s.params);
  return j;
}

Json to_json(const Rational& v) { return Json::array({v.num(), v.den()}); }

Json to_json(const ReserveProblem& problem) {
  Json weights = Json::array();
  for (const auto& w : problem.weights) weights.push_back(to_json(w));
  return Json{{"values", problem.values}, {"weights", weights}, {"costs", problem.costs},
              {"budget", problem.budget}};
}

Json to_json(const ReserveSolution& s) {
  Json x = Json::array();
  for (auto v : s.x) x.push_back(static_cast<int>(v));
  return Json{{"x", x}, {"objective", to_json(s.objective)}, {"spent", s.spent}};
}

Json to_json(const Scenario& s) {
  Json weights = Json::array();
  for (const auto& w : s.weights) weights.push_back(to_json(w));
  return Json{{"name", s.name},       {"species", s.species},
              {"observed", to_json(s.observed)},
              {"weights", weights},   {"budgets", s.budgets},
              {"costs", s.costs},     {"lv_params", to_json(s.lv_params)},
              {"seed", s.seed}};
}

Json to_json(const SpeciesSuite& suite) {
  Json species = Json::array();
  for (const auto& sp : suite.species) {
    species.push_back(Json{{"id", sp.id},
                           {"rank", to_string(sp.rank)},
                           {"total", sp.total},
                           {"pool_index", sp.pool_index},
                           {"fragmentation", fragmentation(sp.landscape).value},
                           {"landscape", to_json(sp.landscape)},
                           {"counts", to_json(sp.counts)}});
  }
  return Json{{"seed", suite.seed}, {"pool_size", suite.pool_size}, {"species", species}};
}

Landscape landscape_from_json(const Json& j, std::string_view source) {
  Landscape l;
  l.n = static_cast<int>(as_int(member(j, source, "", "n"), source, "n"));
  if (l.n < 1) fail(source, "n", "must be >= 1");
  l.values = double_array(member(j, source, "", "values"), source, "values");
  if (l.values.size() != l.parcel_count())
    fail(source, "values", "expected " + std::to_string(l.parcel_count()) + " entries");
  for (std::size_t p = 0; p < l.values.size(); ++p) {
    if (!(l.values[p] >= 0.0 && l.values[p] <= 1.0))
      fail(source, index_field("values", p), "habitat values must lie in [0,1]");
  }
  if (j.contains("seed")) l.seed = as_u64(j["seed"], source, "seed");
  if (j.contains("smoothing_rounds"))
    l.smoothing_rounds = static_cast<int>(as_int(j["smoothing_rounds"], source, "smoothing_rounds"));
  return l;
}

CountsGrid counts_from_json(const Json& j, std::string_view source) {
  return grid_from_json<std::int64_t>(j, source, "", as_int);
}

RealGrid real_grid_from_json(const Json& j, std::string_view source) {
  return grid_from_json<double>(j, source, "", as_double);
}

LVParams lv_params_from_json(const Json& j, std::string_view source) {
  return lv_params_at(j, source, "");
}

SimulatedGrid simulated_from_json(const Json& j, std::string_view source) {
  SimulatedGrid s;
  s.counts = real_grid_from_json(j, source);
  if (j.contains("params")) s.params = lv_params_at(j["params"], source, "params");
  return s;
}

Rational rational_from_json(const Json& j, std::string_view source, std::string_view field) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      fail(source, field, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_array() || j.size() != 2) fail(source, field, "expected [numerator, denominator]");
  const auto num = as_int(j[0], source, index_field(field, 0));
  const auto den = as_int(j[1], source, index_field(field, 1));
  if (den <= 0) fail(source, index_field(field, 1), "denominator must be positive");
  return Rational(num, den);
}

ReserveProblem problem_from_json(const Json& j, std::string_view source) {
  ReserveProblem p;
  const Json& values = as_array(member(j, source, "", "values"), source, "values");
  for (std::size_t i = 0; i < values.size(); ++i)
    p.values.push_back(int_array(values[i], source, index_field("values", i)));
  p.weights = weights_at(member(j, source, "", "weights"), source, "weights");
  p.costs = costs_at(member(j, source, "", "costs"), source, "costs");
  p.budget = as_int(member(j, source, "", "budget"), source, "budget");
  try {
    p.validate();
  } catch (const Error& e) {
    fail(source, "<root>", e.what());
  }
  return p;
}

ReserveSolution solution_from_json(const Json& j, std::string_view source) {
  ReserveSolution s;
  for (auto v : int_array(member(j, source, "", "x"), source, "x")) {
    if (v != 0 && v != 1) fail(source, "x", "entries must be 0 or 1");
    s.x.push_back(static_cast<std::uint8_t>(v));
  }
  s.objective = rational_from_json(member(j, source, "", "objective"), source, "objective");
  s.spent = as_int(member(j, source, "", "spent"), source, "spent");
  return s;
}

Scenario scenario_from_json(const Json& j, std::string_view source) {
  Scenario s;
  const Json& name = member(j, source, "", "name");
  if (!name.is_string()) fail(source, "name", "expected a string");
  s.name = name.get<std::string>();
  const Json& species = as_array(member(j, source, "", "species"), source, "species");
  for (std::size_t i = 0; i < species.size(); ++i) {
    if (!species[i].is_string()) fail(source, index_field("species", i), "expected a string");
    s.species.push_back(species[i].get<std::string>());
  }
  s.observed = grid_from_json<std::int64_t>(member(j, source, "", "observed"), source, "observed",
                                            as_int);
  s.weights = weights_at(member(j, source, "", "weights"), source, "weights");
  s.budgets = int_array(member(j, source, "", "budgets"), source, "budgets");
  s.costs = costs_at(member(j, source, "", "costs"), source, "costs");
  s.lv_params = lv_params_at(member(j, source, "", "lv_params"), source, "lv_params");
  s.seed = j.contains("seed") ? as_u64(j["seed"], source, "seed") : 0;
  try {
    s.validate();
  } catch (const Error& e) {
    fail(source, "<root>", e.what());
  }
  return s;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::parse_error, path.string() + ": invalid JSON: " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::io_error, "cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error(ErrorCode::io_error, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::io_error, "cannot rename to " + path.string() + ": " + ec.message());
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  write_file_atomic(path, j.dump(2) + "\n");
}

}  // namespace reservekit
