#include <algorithm>
#include <random>

#include "approx/graph_algos.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace approx;

namespace {

WeightedGraph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5, 1.0});          // outer cycle
    e.push_back({i, i + 5, 1.0});                // spokes
    e.push_back({i + 5, (i + 2) % 5 + 5, 1.0});  // inner pentagram
  }
  return WeightedGraph(10, std::move(e));
}

}  // namespace

TEST_CASE("mst_prim: single vertex, triangle, tree") {
  const SpanningTree one = mst_prim(MetricInstance(std::vector<std::vector<double>>{{0.0}}), 0);
  CHECK(one.total_cost == 0.0);
  CHECK(one.attach_order.empty());

  const MetricInstance tri({{0, 1, 3}, {1, 0, 2}, {3, 2, 0}});
  const SpanningTree t = mst_prim(tri, 0);
  CHECK(t.total_cost == 3.0);
  CHECK(t.parent == std::vector<Vertex>{-1, 0, 1});

  const WeightedGraph tree(5, {{0, 1, 2.5}, {1, 2, 1.0}, {1, 3, 4.0}, {3, 4, 0.5}});
  const SpanningTree st = mst_prim(tree, 2);
  CHECK(st.total_cost == doctest::Approx(8.0));
  CHECK(st.parent == std::vector<Vertex>{1, 2, -1, 1, 3});
}

TEST_CASE("mst_prim: errors") {
  CHECK_THROWS_WITH(mst_prim(WeightedGraph(3, {{0, 1, 1.0}}), 0), doctest::Contains("disconnected"));
  CHECK_THROWS_WITH(mst_prim(MetricInstance({{0, 1}, {1, 0}}), 2), doctest::Contains("out of range"));
}

TEST_CASE("mst_prim: tie-break picks the smallest (new vertex, tree vertex)") {
  // All costs equal: 0 joins from the root, then 1 is offered by 2 and 0 and takes 0.
  const MetricInstance flat({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  const SpanningTree t = mst_prim(flat, 2);
  CHECK(t.attach_order == std::vector<std::pair<Vertex, Vertex>>{{2, 0}, {0, 1}});
}

TEST_CASE("property: mst_prim matches spanning-tree enumeration for n <= 7") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 7;
    const WeightedGraph g = oracle::random_graph(rng, n, 0.6, 9);
    const double expect = oracle::spanning_tree(g);
    if (std::isinf(expect)) {
      CHECK_THROWS_AS(mst_prim(g, 0), InputError);
      continue;
    }
    REQUIRE(mst_prim(g, 0).total_cost == doctest::Approx(expect));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("preorder_walk: star, path, single") {
  SpanningTree star{0, {-1, 0, 0, 0}, 3.0, {}};
  CHECK(preorder_walk(star) == std::vector<Vertex>{0, 1, 2, 3});
  SpanningTree path{0, {-1, 0, 1}, 2.0, {}};
  CHECK(preorder_walk(path) == std::vector<Vertex>{0, 1, 2});
  SpanningTree single{0, {-1}, 0.0, {}};
  CHECK(preorder_walk(single) == std::vector<Vertex>{0});
  SpanningTree deep{2, {2, 0, -1, 2, 3}, 0.0, {}};
  CHECK(preorder_walk(deep) == std::vector<Vertex>{2, 0, 1, 3, 4});
}

TEST_CASE("property: preorder walk is a parent-first permutation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = oracle::random_euclidean(rng, 1 + trial % 12);
    const SpanningTree t = mst_prim(m, trial % m.n());
    const auto order = preorder_walk(t);
    std::vector<int> pos(order.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    CHECK(order.front() == t.root);
    for (Vertex v = 0; v < m.n(); ++v) {
      REQUIRE(pos[static_cast<std::size_t>(v)] >= 0);
      if (v != t.root) REQUIRE(pos[static_cast<std::size_t>(t.parent[static_cast<std::size_t>(v)])] < pos[static_cast<std::size_t>(v)]);
    }
  }
}

TEST_CASE("check_triangle_inequality") {
  CHECK_FALSE(check_triangle_inequality(MetricInstance({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})).has_value());
  const auto v = check_triangle_inequality(MetricInstance({{0, 10, 1}, {10, 0, 1}, {1, 1, 0}}));
  REQUIRE(v.has_value());
  CHECK(*v == TriangleViolation{0, 2, 1});

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = oracle::random_euclidean(rng, 8, 1000.0);
    CHECK_FALSE(check_triangle_inequality(m).has_value());
  }
}

TEST_CASE("find_hamiltonian_cycle: complete, tree, Petersen, cap") {
  std::vector<Edge> k4;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.push_back({u, v, 1.0});
  const auto c = find_hamiltonian_cycle(WeightedGraph(4, k4));
  REQUIRE(c.has_value());
  CHECK(*c == std::vector<Vertex>{0, 1, 2, 3});

  CHECK_FALSE(find_hamiltonian_cycle(WeightedGraph(4, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}})).has_value());
  CHECK_FALSE(find_hamiltonian_cycle(petersen()).has_value());
  CHECK_FALSE(find_hamiltonian_cycle(WeightedGraph(2, {{0, 1, 1}})).has_value());
  CHECK_THROWS_AS(find_hamiltonian_cycle(WeightedGraph(21, {})), CapExceeded);
  CHECK_NOTHROW(find_hamiltonian_cycle(WeightedGraph(21, {}), 21));
}

TEST_CASE("property: Hamiltonian search agrees with permutation enumeration for n <= 8") {
  std::mt19937_64 rng(23);
  int found = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 8;
    const WeightedGraph g = oracle::random_graph(rng, n, 0.55);
    const auto cycle = find_hamiltonian_cycle(g);
    REQUIRE(cycle.has_value() == oracle::hamiltonian(g));
    if (!cycle) continue;
    ++found;
    REQUIRE(static_cast<int>(cycle->size()) == n);
    for (std::size_t i = 0; i < cycle->size(); ++i) REQUIRE(g.has_edge((*cycle)[i], (*cycle)[(i + 1) % cycle->size()]));
  }
  CHECK(found > 20);
}

TEST_CASE("greedy_maximal_matching") {
  CHECK(greedy_maximal_matching(WeightedGraph(3, {})).empty());
  CHECK(greedy_maximal_matching(WeightedGraph(2, {{0, 1, 1}})) == std::vector<Edge>{{0, 1, 1}});
  CHECK(greedy_maximal_matching(WeightedGraph(3, {{0, 1, 1}, {1, 2, 1}})) == std::vector<Edge>{{0, 1, 1}});

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightedGraph g = oracle::random_graph(rng, 2 + trial % 10, 0.3);
    const auto m = greedy_maximal_matching(g);
    std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
    for (const Edge& e : m) {
      ++deg[static_cast<std::size_t>(e.u)];
      ++deg[static_cast<std::size_t>(e.v)];
    }
    REQUIRE(std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 1; }));
    for (const Edge& e : g.edges()) REQUIRE((deg[static_cast<std::size_t>(e.u)] + deg[static_cast<std::size_t>(e.v)]) > 0);
  }
}
