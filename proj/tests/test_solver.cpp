#include <doctest.h>

#include <random>
#include <vector>

#include "reservekit/solver.hpp"

using namespace reservekit;

namespace {

ReserveProblem scores_problem(std::vector<std::int64_t> scores, std::vector<std::int64_t> costs,
                              std::int64_t budget) {
  return ReserveProblem{{std::move(scores)}, {Rational(1)}, std::move(costs), budget};
}

ReserveProblem random_problem(std::mt19937_64& rng, std::size_t parcels, bool unit_costs) {
  std::uniform_int_distribution<std::size_t> species_dist(1, 3);
  std::uniform_int_distribution<std::int64_t> value(0, 50), cost(0, 10), num(0, 9), den(1, 9);
  const std::size_t species = species_dist(rng);
  ReserveProblem p;
  p.values.assign(species, std::vector<std::int64_t>(parcels));
  for (auto& row : p.values)
    for (auto& v : row) v = value(rng);
  for (std::size_t i = 0; i < species; ++i) p.weights.emplace_back(num(rng), den(rng));
  std::int64_t total = 0;
  for (std::size_t k = 0; k < parcels; ++k) {
    p.costs.push_back(unit_costs ? 1 : cost(rng));
    total += p.costs.back();
  }
  std::uniform_int_distribution<std::int64_t> budget(0, total + 2);
  p.budget = budget(rng);
  return p;
}

std::vector<std::size_t> set_of(const ReserveSolution& s) { return s.protected_parcels(); }

}  // namespace

TEST_CASE("parcel_score examples") {
  ReserveProblem p{{{3, 1}, {4, 1}}, {Rational(1), Rational(1)}, {1, 1}, 1};
  CHECK(parcel_score(p, 0) == Rational(7));
  ReserveProblem w{{{10}, {10}}, {Rational::parse("0.9"), Rational::parse("0.1")}, {1}, 1};
  CHECK(parcel_score(w, 0) == Rational(10));
  ReserveProblem z{{{10, 2}, {10, 3}}, {Rational(0), Rational(0)}, {1, 1}, 1};
  CHECK(parcel_score(z, 0) == Rational(0));
  CHECK(parcel_score(z, 1) == Rational(0));
  try {
    parcel_score(z, 2);
    FAIL("expected out of range");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::index_out_of_range);
  }
}

TEST_CASE("solve_topk examples") {
  const auto zero = solve_topk(scores_problem({5, 3, 2}, {1, 1, 1}, 0));
  CHECK(zero.x == std::vector<std::uint8_t>{0, 0, 0});
  CHECK(zero.objective == Rational(0));

  const auto all = solve_topk(scores_problem({5, 3, 2}, {1, 1, 1}, 7));
  CHECK(all.x == std::vector<std::uint8_t>{1, 1, 1});
  CHECK(all.spent == 3);

  const auto tie = solve_topk(scores_problem({5, 5, 2}, {1, 1, 1}, 1));
  CHECK(tie.x == std::vector<std::uint8_t>{1, 0, 0});

  try {
    solve_topk(scores_problem({5, 5, 2}, {1, 2, 1}, 1));
    FAIL("expected wrong solver");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::wrong_solver);
  }
}

TEST_CASE("solve_dp examples") {
  const auto a = solve_dp(scores_problem({5, 3, 2}, {1, 1, 1}, 2));
  CHECK(set_of(a) == std::vector<std::size_t>{0, 1});
  CHECK(a.objective == Rational(8));

  // Brute force over the 8 subsets: {1,2} costs 4 and scores 10; {0} scores 6.
  const auto b = solve_dp(scores_problem({6, 5, 5}, {3, 2, 2}, 4));
  CHECK(set_of(b) == std::vector<std::size_t>{1, 2});
  CHECK(b.objective == Rational(10));
  CHECK(b.spent == 4);
}

TEST_CASE("zero-cost parcels are always protected") {
  const auto s = solve_dp(scores_problem({0, 4, 9, 1}, {0, 3, 5, 0}, 0));
  CHECK(s.x == std::vector<std::uint8_t>{1, 0, 0, 1});
  CHECK(solve_bruteforce(scores_problem({0, 4, 9, 1}, {0, 3, 5, 0}, 0)).x == s.x);
}

TEST_CASE("solve_bruteforce examples and guard") {
  const auto one = solve_bruteforce(scores_problem({7}, {1}, 1));
  CHECK(one.x == std::vector<std::uint8_t>{1});
  CHECK(one.objective == Rational(7));
  CHECK(set_of(solve_bruteforce(scores_problem({3, 4}, {1, 2}, 0))).empty());

  ReserveProblem big = scores_problem(std::vector<std::int64_t>(21, 1),
                                      std::vector<std::int64_t>(21, 1), 3);
  try {
    solve_bruteforce(big);
    FAIL("expected refusal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::too_many_parcels);
  }
}

TEST_CASE("validation errors") {
  ReserveProblem p = scores_problem({1, 2}, {1, 1}, 1);
  p.weights.push_back(Rational(1));
  CHECK_THROWS_AS(solve_dp(p), Error);
  p = scores_problem({1, -2}, {1, 1}, 1);
  CHECK_THROWS_AS(solve_dp(p), Error);
  p = scores_problem({1, 2}, {1, 1}, -1);
  CHECK_THROWS_AS(solve_dp(p), Error);
  try {
    integer_costs(std::vector<double>{1.0, 2.5});
    FAIL("expected non-integer cost");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_integer_cost);
  }
  CHECK(integer_costs(std::vector<double>{1.0, 3.0}) == std::vector<std::int64_t>{1, 3});
}

TEST_CASE("property: dp agrees with brute force, including the chosen set") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_problem(rng, 1 + trial % 12, false);
    const auto dp = solve_dp(p);
    const auto bf = solve_bruteforce(p);
    CAPTURE(trial);
    CHECK(dp.objective == bf.objective);
    CHECK(dp.x == bf.x);
    CHECK(dp.spent <= p.budget);
    CHECK(evaluate(p, dp.x) == dp);
  }
}

TEST_CASE("property: objective is monotone in budget") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = random_problem(rng, 14, false);
    Rational last(0);
    for (std::int64_t b = 0; b <= 40; ++b) {
      p.budget = b;
      const auto s = solve_dp(p);
      CHECK(s.spent <= b);
      CHECK(!(s.objective < last));
      last = s.objective;
    }
  }
}

TEST_CASE("property: scaling all weights keeps the selected set") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_problem(rng, 16, trial % 2 == 0);
    auto scaled = p;
    const Rational factor(1 + trial % 7, 1 + trial % 5);
    for (auto& w : scaled.weights) w = w * factor;
    const auto a = solve_dp(p);
    const auto b = solve_dp(scaled);
    CHECK(a.x == b.x);
    CHECK(b.objective == a.objective * factor);
  }
}

TEST_CASE("property: topk and dp agree for unit costs") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_problem(rng, 100, true);
    CHECK(solve_topk(p).x == solve_dp(p).x);
    CHECK(solve(p).x == solve_dp(p).x);
  }
}
