#include <random>

#include "approx/knapsack.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace approx;

TEST_CASE("knapsack examples") {
  const KnapsackInstance k({{60, 10}, {100, 20}, {120, 30}}, 50);
  const auto exact = knapsack_exact(k);
  CHECK(exact.total_value == 220);
  CHECK(exact.chosen == std::vector<std::size_t>{1, 2});
  CHECK(exact.total_weight == 50);
  const auto greedy = knapsack_greedy(k);
  CHECK(greedy.total_value == 160);
  CHECK(greedy.chosen == std::vector<std::size_t>{0, 1});
  CHECK(knapsack_fptas(k, 0.1).total_value == 220);
}

TEST_CASE("greedy falls back to the single best item") {
  const KnapsackInstance k({{2, 1}, {100, 100}}, 100);
  const auto g = knapsack_greedy(k);
  CHECK(g.chosen == std::vector<std::size_t>{1});
  CHECK(g.total_value == 100);
}

TEST_CASE("degenerate inputs") {
  const KnapsackInstance none({}, 10);
  CHECK(knapsack_exact(none).total_value == 0);
  CHECK(knapsack_greedy(none).total_value == 0);
  CHECK(knapsack_fptas(none, 0.5).total_value == 0);
  const KnapsackInstance zero({{5, 3}}, 0);
  CHECK(knapsack_exact(zero).chosen.empty());
  CHECK(knapsack_greedy(zero).chosen.empty());
  CHECK(knapsack_fptas(zero, 0.5).chosen.empty());
  CHECK_THROWS_AS(knapsack_fptas(zero, 0.0), InputError);
  CHECK_THROWS_AS(knapsack_fptas(zero, 1.0), InputError);
  CHECK_THROWS_AS(knapsack_exact(KnapsackInstance({{1, 1}, {1, 1}}, 1000), 100), CapExceeded);
}

TEST_CASE("evaluate_selection") {
  const KnapsackInstance k({{60, 10}, {100, 20}}, 50);
  CHECK(evaluate_selection(k, {1, 0}) == KnapsackSolution{{0, 1}, 160, 30});
  CHECK_THROWS_AS(evaluate_selection(k, {2}), InputError);
  CHECK_THROWS_AS(evaluate_selection(k, {0, 0}), InputError);
}

TEST_CASE("property: exact = enumeration, greedy >= OPT/2, FPTAS >= (1-eps) OPT, all feasible") {
  std::mt19937_64 rng(41);
  const double eps_values[] = {0.1, 0.3, 0.5};
  for (int trial = 0; trial < 400; ++trial) {
    const auto k = oracle::random_knapsack(rng, 1 + trial % 12, trial % 2 ? 1000 : 30, 60);
    const std::int64_t opt = oracle::knapsack(k);
    const double eps = eps_values[trial % 3];
    for (const auto& sol : {knapsack_exact(k), knapsack_greedy(k), knapsack_fptas(k, eps)}) {
      REQUIRE(sol.total_weight <= k.capacity());
      REQUIRE(evaluate_selection(k, sol.chosen) == sol);
    }
    REQUIRE(knapsack_exact(k).total_value == opt);
    REQUIRE(2 * knapsack_greedy(k).total_value >= opt);
    REQUIRE(static_cast<double>(knapsack_fptas(k, eps).total_value) >= (1.0 - eps) * static_cast<double>(opt) - 1e-9);
  }
}
