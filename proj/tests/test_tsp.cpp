#include <algorithm>
#include <random>

#include "approx/generator.hpp"
#include "approx/graph_algos.hpp"
#include "approx/tsp.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace approx;

TEST_CASE("approx_tsp_tour: unit square and collinear points") {
  const MetricInstance square = euclidean_metric({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const Tour t = approx_tsp_tour(square);
  CHECK(t.order == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(t.cost == doctest::Approx(4.0));

  const MetricInstance line = euclidean_metric({{0, 0}, {1, 0}, {2, 0}, {4, 0}});
  CHECK(approx_tsp_tour(line).cost == doctest::Approx(8.0));
  CHECK(held_karp(line).cost == doctest::Approx(8.0));
}

TEST_CASE("approx_tsp_tour: trivial sizes and roots") {
  CHECK(approx_tsp_tour(MetricInstance(std::vector<std::vector<double>>{{0.0}})) == Tour{{0}, 0.0});
  CHECK(held_karp(MetricInstance(std::vector<std::vector<double>>{{0.0}})) == Tour{{0}, 0.0});
  const MetricInstance two({{0, 3}, {3, 0}});
  CHECK(approx_tsp_tour(two).cost == 6.0);
  CHECK(held_karp(two).cost == 6.0);
  CHECK(approx_tsp_tour(two, {1, false}).order == std::vector<Vertex>{1, 0});
  CHECK_THROWS_AS(approx_tsp_tour(two, {2, false}), InputError);
}

TEST_CASE("triangle violation is rejected unless forced") {
  const MetricInstance bad({{0, 10, 1}, {10, 0, 1}, {1, 1, 0}});
  try {
    approx_tsp_tour(bad);
    FAIL("expected rejection");
  } catch (const TriangleInequalityError& e) {
    CHECK(e.violation() == TriangleViolation{0, 2, 1});
  }
  const Tour forced = approx_tsp_tour(bad, {0, true});
  CHECK(forced.order.size() == 3);
  CHECK(forced.cost == doctest::Approx(evaluate_tour(bad, forced.order)));
}

TEST_CASE("evaluate_tour rejects non-permutations") {
  const MetricInstance m = euclidean_metric({{0, 0}, {1, 0}, {0, 1}});
  CHECK_THROWS_AS(evaluate_tour(m, std::vector<Vertex>{0, 1}), InputError);
  CHECK_THROWS_AS(evaluate_tour(m, std::vector<Vertex>{0, 1, 1}), InputError);
  CHECK_THROWS_AS(evaluate_tour(m, std::vector<Vertex>{0, 1, 3}), InputError);
}

TEST_CASE("held_karp cap") {
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(held_karp(oracle::random_euclidean(rng, 19)), CapExceeded);
  CHECK_THROWS_AS(held_karp(oracle::random_euclidean(rng, 6), 5), CapExceeded);
}

TEST_CASE("property: held_karp equals enumeration; approx within 2x; MST <= OPT") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 9;
    const MetricInstance m = oracle::random_euclidean(rng, n);
    const double opt = oracle::tsp(m);
    const Tour hk = held_karp(m);
    REQUIRE(hk.cost == doctest::Approx(opt));
    REQUIRE(static_cast<int>(hk.order.size()) == n);
    REQUIRE(hk.order.front() == 0);
    REQUIRE(evaluate_tour(m, hk.order) == doctest::Approx(hk.cost));
    const Vertex root = static_cast<Vertex>(trial % n);
    const Tour apx = approx_tsp_tour(m, {root, false});
    REQUIRE(apx.order.front() == root);
    REQUIRE(apx.cost <= 2.0 * opt + 1e-9);
    REQUIRE(mst_prim(m, root).total_cost <= opt + 1e-9);
  }
}

TEST_CASE("property: tour cost is invariant under rotation and reversal") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const MetricInstance m = oracle::random_euclidean(rng, 2 + trial % 9);
    auto order = approx_tsp_tour(m).order;
    const double base = evaluate_tour(m, order);
    std::rotate(order.begin(), order.begin() + 1, order.end());
    REQUIRE(evaluate_tour(m, order) == doctest::Approx(base));
    std::reverse(order.begin(), order.end());
    REQUIRE(evaluate_tour(m, order) == doctest::Approx(base));
  }
}
