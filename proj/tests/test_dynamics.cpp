#include <doctest.h>

#include <cmath>
#include <vector>

#include "reservekit/dynamics.hpp"
#include "reservekit/landscape.hpp"

using namespace reservekit;

namespace {

LVParams logistic(double r, double beta, double dt = 0.01, std::int64_t steps = 2000) {
  return LVParams{{r}, {{0.0}}, {beta}, dt, steps};
}

}  // namespace

TEST_CASE("lv_step examples") {
  const auto p = default_lv_params(3);
  CHECK(lv_step(std::vector<double>{0, 0, 0}, p) == std::vector<double>{0, 0, 0});

  // r = 0.5, beta = 0.25: fixed point 2 is exact in binary.
  const auto fixed = logistic(0.5, 0.25, 0.3);
  CHECK(lv_step(std::vector<double>{2.0}, fixed)[0] == 2.0);

  // 50 + 0.01 * (0.1 * 50 - 0.001 * 2500) = 50.025
  const auto one = lv_step(std::vector<double>{50.0}, logistic(0.1, 0.001));
  CHECK(one[0] == doctest::Approx(50.025).epsilon(1e-14));
}

TEST_CASE("lv_step updates species simultaneously") {
  // Species 0 is hit by competition from species 1's pre-step value.
  LVParams p{{0.2, 0.1}, {{0.0, 0.01}, {0.02, 0.0}}, {0.001, 0.002}, 0.5, 1};
  const std::vector<double> s{10.0, 20.0};
  const auto next = lv_step(s, p);
  const double d0 = 0.5 * (0.2 * 10 - 10 * 0.01 * 20 - 0.001 * 100);
  const double d1 = 0.5 * (0.1 * 20 - 20 * 0.02 * 10 - 0.002 * 400);
  CHECK(next[0] == doctest::Approx(10 + d0));
  CHECK(next[1] == doctest::Approx(20 + d1));
}

TEST_CASE("fixed point is bit-stable over 1000 steps") {
  const auto p = logistic(0.5, 0.25, 0.1);
  std::vector<double> s{2.0};
  for (int i = 0; i < 1000; ++i) s = lv_step(s, p);
  CHECK(s[0] == 2.0);
}

TEST_CASE("clamping keeps populations nonnegative") {
  // Huge dt overshoots below zero without the clamp.
  LVParams p{{0.1, 0.1}, {{0.0, 5.0}, {5.0, 0.0}}, {1.0, 1.0}, 10.0, 50};
  std::vector<double> s{30.0, 40.0};
  for (int i = 0; i < 200; ++i) {
    s = lv_step(s, p);
    CHECK(s[0] >= 0.0);
    CHECK(s[1] >= 0.0);
  }
}

TEST_CASE("monotone increase below the logistic fixed point") {
  const auto p = logistic(0.1, 0.001);
  std::vector<double> s{5.0};
  for (int i = 0; i < 5000; ++i) {
    const auto next = lv_step(s, p);
    CHECK(next[0] > s[0]);
    s = next;
  }
}

TEST_CASE("simulate: zero dynamics is the identity") {
  CountsGrid g(3, 2);
  for (std::size_t p = 0; p < 9; ++p) {
    g.at(0, p) = static_cast<std::int64_t>(p);
    g.at(1, p) = static_cast<std::int64_t>(2 * p + 1);
  }
  const auto sim = simulate(g, zero_dynamics(2, 50));
  CHECK(round_counts(sim) == g);
  for (std::size_t p = 0; p < 9; ++p) CHECK(sim.counts.at(0, p) == static_cast<double>(p));
}

TEST_CASE("simulate: single species tracks the closed-form logistic curve") {
  // N(t) = K / (1 + (K / N0 - 1) exp(-r t)), K = r / beta, t = steps * dt.
  auto closed_form = [](double n0, double t) {
    const double k = 100.0;
    return k / (1.0 + (k / n0 - 1.0) * std::exp(-0.1 * t));
  };
  CountsGrid g(2, 1);
  g.counts[0] = {10, 1, 250, 0};
  const auto sim = simulate(g, logistic(0.1, 0.001));  // t = 20
  const std::int64_t starts[] = {10, 1, 250};
  for (std::size_t p = 0; p < 3; ++p) {
    const double expected = closed_form(static_cast<double>(starts[p]), 20.0);
    CHECK(std::abs(sim.counts.at(0, p) - expected) / expected < 2e-3);
  }
  CHECK(sim.counts.at(0, 3) == 0.0);

  // With enough steps every occupied parcel settles at r / beta.
  const auto settled = simulate(g, logistic(0.1, 0.001, 0.01, 200000));
  for (std::size_t p = 0; p < 3; ++p) CHECK(std::abs(settled.counts.at(0, p) - 100.0) < 1.0);
}

TEST_CASE("simulate: two species converge to a prescribed coexistence equilibrium") {
  // Choose beta and a symmetric alpha, then r_i = beta_i N_i* + alpha_ij N_j*.
  const double n0 = 40.0, n1 = 60.0, beta = 0.01, alpha = 0.005;
  LVParams p{{beta * n0 + alpha * n1, beta * n1 + alpha * n0},
             {{0.0, alpha}, {alpha, 0.0}}, {beta, beta}, 0.01, 2000};
  CountsGrid g(2, 2);
  g.counts[0] = {42, 10, 39, 36};
  g.counts[1] = {58, 10, 61, 66};
  const auto sim = simulate(g, p);
  for (std::size_t parcel = 0; parcel < 4; ++parcel) {
    CAPTURE(parcel);
    CHECK(std::abs(sim.counts.at(0, parcel) - n0) / n0 < 0.02);
    CHECK(std::abs(sim.counts.at(1, parcel) - n1) / n1 < 0.02);
  }
}

TEST_CASE("simulate equals per-parcel simulation reassembled") {
  const auto l = generate_landscape(4, 1, 3);
  CountsGrid g = stack_species(std::vector<CountsGrid>{distribute_population(l, 40, 1),
                                                       distribute_population(l, 90, 2),
                                                       distribute_population(l, 15, 3)});
  auto p = default_lv_params(3);
  p.steps = 50;
  const auto sim = simulate(g, p);
  for (std::size_t parcel = 0; parcel < g.parcel_count(); ++parcel) {
    std::vector<double> init;
    for (std::size_t i = 0; i < 3; ++i) init.push_back(static_cast<double>(g.at(i, parcel)));
    const auto alone = simulate_parcel(init, p);
    for (std::size_t i = 0; i < 3; ++i) CHECK(sim.counts.at(i, parcel) == alone[i]);
  }
}

TEST_CASE("params validation") {
  auto p = default_lv_params(2);
  p.alpha[0][0] = 0.1;
  CHECK_THROWS_AS(p.validate(), Error);
  p = default_lv_params(2);
  p.dt = 0.0;
  CHECK_THROWS_AS(p.validate(), Error);
  p = default_lv_params(2);
  p.r[1] = -1.0;
  CHECK_THROWS_AS(p.validate(), Error);
  CHECK_THROWS_AS(simulate(CountsGrid(2, 3), default_lv_params(2)), Error);
}

TEST_CASE("round_counts is half-up") {
  CHECK(round_half_up(2.5) == 3);
  CHECK(round_half_up(0.0) == 0);
  CHECK(round_half_up(99.4999) == 99);
  CHECK(round_half_up(0.49999999999999994) == 0);
  CHECK(round_half_up(7.5000001) == 8);
  CHECK_THROWS_AS(round_half_up(-0.1), Error);
}
