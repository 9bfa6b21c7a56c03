#include <random>

#include "approx/instance.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace approx;

TEST_CASE("validate: minimal graph and invariant violations") {
  CHECK_NOTHROW(WeightedGraph(2, {{0, 1, 1.0}}));
  CHECK_THROWS_AS(WeightedGraph(2, {{0, 0, 1.0}}), ValidationError);
  CHECK_THROWS_WITH(WeightedGraph(2, {{0, 0, 1.0}}), doctest::Contains("self-loop"));
  CHECK_THROWS_WITH(WeightedGraph(3, {{0, 1, 1.0}, {1, 0, 2.0}}), doctest::Contains("duplicate"));
  CHECK_THROWS_WITH(WeightedGraph(2, {{0, 1, -1.0}}), doctest::Contains("nonnegative"));
  CHECK_THROWS_WITH(WeightedGraph(2, {{0, 2, 1.0}}), doctest::Contains("out of range"));
}

TEST_CASE("validate: subset-sum, knapsack and metric rules") {
  const SubsetSumInstance s({104, 102, 201, 101}, 308);
  CHECK(s.size() == 4);
  CHECK(s.set()[0] == 101);
  CHECK_THROWS_WITH(SubsetSumInstance({3, 0}, 5), doctest::Contains("set[1]"));
  CHECK_THROWS_AS(SubsetSumInstance({1}, 0), ValidationError);
  CHECK_NOTHROW(SubsetSumInstance({}, 10));
  CHECK_THROWS_WITH(SubsetSumInstance({std::numeric_limits<std::int64_t>::max(), 1}, 5), doctest::Contains("63-bit"));

  CHECK_THROWS_WITH(KnapsackInstance({{1, 0}}, 3), doctest::Contains("weight"));
  CHECK_THROWS_WITH(KnapsackInstance({{0, 1}}, 3), doctest::Contains("value"));
  CHECK_THROWS_AS(KnapsackInstance({}, -1), ValidationError);

  CHECK_THROWS_WITH(MetricInstance({{0, 1}, {2, 0}}), doctest::Contains("asymmetric"));
  CHECK_THROWS_WITH(MetricInstance({{1, 1}, {1, 0}}), doctest::Contains("diagonal"));
  CHECK_THROWS_WITH(MetricInstance({{0, 1}}), doctest::Contains("row length"));
}

TEST_CASE("edges are canonicalized with u < v sorted by (u, v)") {
  const WeightedGraph g(4, {{3, 2, 1.0}, {1, 0, 2.0}, {0, 3, 0.5}});
  REQUIRE(g.edge_count() == 3);
  CHECK(g.edges()[0] == Edge{0, 1, 2.0});
  CHECK(g.edges()[1] == Edge{0, 3, 0.5});
  CHECK(g.edges()[2] == Edge{2, 3, 1.0});
  CHECK(g.has_edge(3, 0));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK(g.weight(3, 2) == 1.0);
}

TEST_CASE("read_instance maps fields directly") {
  const Instance s = read_instance(R"({"kind":"subset_sum","set":[1,2,3],"t":4})");
  CHECK(std::get<SubsetSumInstance>(s) == SubsetSumInstance({1, 2, 3}, 4));

  const Instance g = read_instance(R"({"kind":"graph","n":3,"edges":[[0,1,1],[1,2,1]]})");
  CHECK(std::get<WeightedGraph>(g) == WeightedGraph(3, {{0, 1, 1.0}, {1, 2, 1.0}}));

  CHECK_THROWS_WITH(read_instance(R"({"kind":"graph","n":3,"edges":[[0,3,1]]})"), doctest::Contains("out of range"));
  CHECK_THROWS_WITH(read_instance(R"({"kind":"graph","n":3,"edges":[[0,1,1]])"), doctest::Contains("malformed"));
  CHECK_THROWS_WITH(read_instance(R"({"kind":"matroid"})"), doctest::Contains("unknown problem kind"));
  CHECK_THROWS_WITH(read_instance(R"({"kind":"subset_sum","set":[1.5],"t":4})"), doctest::Contains("integer"));
  CHECK_THROWS_WITH(read_instance(R"({"kind":"knapsack","items":[[1,1]]})"), doctest::Contains("capacity"));
  CHECK_THROWS_AS(read_instance("[1,2]"), InputError);
}

TEST_CASE("write_instance is canonical") {
  CHECK(write_instance(WeightedGraph(1, {})) == R"({"kind":"graph","n":1,"edges":[]})");
  const Instance g = WeightedGraph(3, {{2, 1, 1.5}, {0, 1, 2.0}});
  CHECK(write_instance(g) == R"({"kind":"graph","n":3,"edges":[[0,1,2.0],[1,2,1.5]]})");
  CHECK(write_instance(g) == write_instance(g));
  CHECK(write_instance(SubsetSumInstance({3, 1, 2}, 4)) == R"({"kind":"subset_sum","set":[1,2,3],"t":4})");
  CHECK(write_instance(KnapsackInstance({{60, 10}, {100, 20}}, 50)) ==
        R"({"kind":"knapsack","items":[[60,10],[100,20]],"capacity":50})");
  CHECK(write_instance(MetricInstance({{0, 1}, {1, 0}})) == R"({"kind":"metric","n":2,"cost":[[0.0,1.0],[1.0,0.0]]})");
  CHECK(instance_digest(g).size() == 16);
  CHECK(instance_digest(g) != instance_digest(WeightedGraph(3, {})));
}

TEST_CASE("property: read(write(i)) == i over generated instances of every kind") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 9;
    std::vector<Instance> cases{
        oracle::random_graph(rng, n, 0.4, 9),
        oracle::random_euclidean(rng, n),
        oracle::random_subset_sum(rng, n, 1000),
        oracle::random_knapsack(rng, n, 100, 100),
    };
    for (const Instance& inst : cases) {
      const std::string text = write_instance(inst);
      const Instance back = read_instance(text);
      REQUIRE(back == inst);
      REQUIRE(write_instance(back) == text);
    }
  }
}

TEST_CASE("property: targeted mutations of valid instances are rejected") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const WeightedGraph g = oracle::random_graph(rng, 6, 0.5, 5);
    if (g.edge_count() == 0) continue;
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    auto loop = edges;
    loop[0].v = loop[0].u;
    CHECK_THROWS_AS(WeightedGraph(6, loop), ValidationError);
    auto dup = edges;
    dup.push_back({edges[0].v, edges[0].u, 1.0});
    CHECK_THROWS_AS(WeightedGraph(6, dup), ValidationError);
    auto negative = edges;
    negative.back().w = -0.5;
    CHECK_THROWS_AS(WeightedGraph(6, negative), ValidationError);

    auto m = oracle::random_euclidean(rng, 4).matrix();
    m[1][2] += 1.0;
    CHECK_THROWS_AS(MetricInstance{m}, ValidationError);
  }
}
