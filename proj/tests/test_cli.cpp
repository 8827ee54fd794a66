#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "reservekit/experiment.hpp"
#include "reservekit/serialization.hpp"

namespace fs = std::filesystem;
using namespace reservekit;

namespace {

const fs::path kTmp = RESERVEKIT_TEST_TMP;

struct Result {
  int status;
  std::string err;
  std::string out;
};

Result run(const std::string& args) {
  fs::create_directories(kTmp);
  const auto out = kTmp / "stdout.txt";
  const auto err = kTmp / "stderr.txt";
  const std::string cmd = std::string(RESERVEKIT_CLI_PATH) + " " + args + " >" + out.string() +
                          " 2>" + err.string();
  const int raw = std::system(cmd.c_str());
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(err), slurp(out)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string p(const fs::path& path) { return path.string(); }

}  // namespace

TEST_CASE("generate -> simulate -> solve -> render chain") {
  const auto dir = kTmp / "chain";
  fs::remove_all(dir);
  REQUIRE(run("generate --seed 17 --pool 60 --out " + p(dir)).status == 0);
  for (const char* f : {"suite.json", "S0.json", "S7.json", "case1.json", "case6.json",
                        "case2_counts.json"})
    CHECK(fs::exists(dir / f));

  REQUIRE(run("simulate --counts " + p(dir / "case2_counts.json") + " --out " + p(dir / "sim.json") +
              " --rounded " + p(dir / "sim_rounded.json"))
              .status == 0);
  const auto sim = simulated_from_json(read_json_file(dir / "sim.json"), "sim.json");
  CHECK(sim.counts.species_count() == 2);

  REQUIRE(run("solve --counts " + p(dir / "case2_counts.json") + " --budget 55 --out " +
              p(dir / "sol1.json"))
              .status == 0);
  REQUIRE(run("solve --counts " + p(dir / "sim.json") + " --budget 55 --out " + p(dir / "sol2.json"))
              .status == 0);
  const auto s1 = solution_from_json(read_json_file(dir / "sol1.json"), "sol1.json");
  const auto s2 = solution_from_json(read_json_file(dir / "sol2.json"), "sol2.json");
  CHECK(s1.spent == 55);
  CHECK(s2.spent == 55);

  // The interaction model via the scenario matches the file chain.
  REQUIRE(run("solve --scenario " + p(dir / "case2.json") + " --model 2 --budget 55 --out " +
              p(dir / "sol2b.json"))
              .status == 0);
  CHECK(solution_from_json(read_json_file(dir / "sol2b.json"), "x") == s2);

  const auto r = run("render --counts " + p(dir / "case2_counts.json") + " --solution " +
                     p(dir / "sol1.json") + " --counts2 " + p(dir / "sim_rounded.json") +
                     " --solution2 " + p(dir / "sol2.json") + " --out " + p(dir / "fig.svg"));
  REQUIRE(r.status == 0);
  const auto svg = slurp(dir / "fig.svg");
  const auto expected = std::to_string(similarity(s1, s2)) + "/100 parcels have the same protection status";
  CHECK(svg.find(expected) != std::string::npos);
  CHECK(r.out.find(expected) != std::string::npos);
  std::size_t cells = 0;
  for (auto pos = svg.find("class=\"cell\""); pos != std::string::npos;
       pos = svg.find("class=\"cell\"", pos + 1))
    ++cells;
  CHECK(cells == 200);
}

TEST_CASE("sweep writes 21 rows and report summarizes") {
  const auto dir = kTmp / "sweep";
  fs::remove_all(dir);
  REQUIRE(run("generate --seed 3 --pool 40 --out " + p(dir)).status == 0);
  REQUIRE(run("sweep --scenario " + p(dir / "case1.json") + " --out " + p(dir / "case1.csv")).status == 0);
  REQUIRE(run("sweep --scenario " + p(dir / "case2.json") + " --out " + p(dir / "case2.csv")).status == 0);
  REQUIRE(run("sweep --scenario " + p(dir / "case2.json") + " --weights 0.9,0.1 --out " +
              p(dir / "case2w.csv"))
              .status == 0);
  const auto csv = slurp(dir / "case1.csv");
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == 22);
  CHECK(csv.rfind("budget,similarity,objective1,objective2\n0,100,", 0) == 0);

  REQUIRE(run("report --sweep " + p(dir / "case1.csv") + " --sweep " + p(dir / "case2.csv") +
              " --out " + p(dir / "table.csv"))
              .status == 0);
  const auto table = slurp(dir / "table.csv");
  CHECK(table.rfind("case,min,average,median\n1,", 0) == 0);
  CHECK(table.find("\n2,") != std::string::npos);

  REQUIRE(run("report --sweep " + p(dir / "case2.csv") + " --sweep " + p(dir / "case2w.csv") +
              " --label unweighted --label weighted --out " + p(dir / "t2.csv") + " --plot " +
              p(dir / "plot.csv"))
              .status == 0);
  CHECK(slurp(dir / "plot.csv").rfind("budget,unweighted,weighted\n0,100,100\n", 0) == 0);
}

TEST_CASE("solve with zero budget protects nothing") {
  const auto dir = kTmp / "zero";
  fs::create_directories(dir);
  write_json_file(dir / "problem.json",
                  Json::parse(R"({"values":[[3,1,4],[1,5,9]],"weights":[[1,1],[1,2]],"costs":[1,2,1],"budget":0})"));
  REQUIRE(run("solve --problem " + p(dir / "problem.json") + " --out " + p(dir / "s.json")).status == 0);
  const auto s = solution_from_json(read_json_file(dir / "s.json"), "s");
  CHECK(s.x == std::vector<std::uint8_t>{0, 0, 0});
  REQUIRE(run("solve --problem " + p(dir / "problem.json") + " --budget 2 --out " + p(dir / "s.json")).status == 0);
  CHECK(solution_from_json(read_json_file(dir / "s.json"), "s").x == std::vector<std::uint8_t>{1, 0, 1});
}

TEST_CASE("usage and parse errors") {
  CHECK(run("frobnicate").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("generate --out x").status == 2);  // --seed is mandatory
  CHECK(run("sweep --scenario a.json --out b.csv --bogus 1").status == 2);

  const auto dir = kTmp / "bad";
  fs::create_directories(dir);
  {
    std::ofstream(dir / "grid.json") << R"({"n": 2, "species": 1, "counts": [[1, 2]]})";
  }
  const auto r = run("simulate --counts " + p(dir / "grid.json") + " --out " + p(dir / "o.json"));
  CHECK(r.status == 1);
  CHECK(r.err.find("grid.json") != std::string::npos);
  CHECK(r.err.find("counts[0]") != std::string::npos);

  {
    std::ofstream(dir / "broken.json") << "{ not json";
  }
  const auto b = run("sweep --scenario " + p(dir / "broken.json") + " --out " + p(dir / "o.csv"));
  CHECK(b.status == 1);
  CHECK(b.err.find("broken.json") != std::string::npos);
}

TEST_CASE("identical argv gives identical output files") {
  const auto a = kTmp / "det_a";
  const auto b = kTmp / "det_b";
  fs::remove_all(a);
  fs::remove_all(b);
  REQUIRE(run("generate --seed 99 --pool 30 --n 6 --out " + p(a)).status == 0);
  REQUIRE(run("generate --seed 99 --pool 30 --n 6 --out " + p(b)).status == 0);
  for (const char* f : {"suite.json", "case1.json", "case5.json"}) CHECK(slurp(a / f) == slurp(b / f));
  REQUIRE(run("sweep --scenario " + p(a / "case5.json") + " --out " + p(a / "s.csv")).status == 0);
  REQUIRE(run("sweep --scenario " + p(b / "case5.json") + " --out " + p(b / "s.csv")).status == 0);
  CHECK(slurp(a / "s.csv") == slurp(b / "s.csv"));
}
