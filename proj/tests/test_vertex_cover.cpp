#include <random>

#include "approx/graph_algos.hpp"
#include "approx/vertex_cover.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace approx;

TEST_CASE("approx_vertex_cover examples") {
  CHECK(approx_vertex_cover(WeightedGraph(4, {})).cover.empty());
  CHECK(approx_vertex_cover(WeightedGraph(2, {{0, 1, 1}})).cover == std::vector<Vertex>{0, 1});
  const WeightedGraph p3(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK(approx_vertex_cover(p3).cover == std::vector<Vertex>{0, 1});
  CHECK(oracle::vertex_cover(p3) == std::vector<Vertex>{1});
}

TEST_CASE("exact_vertex_cover examples") {
  CHECK(exact_vertex_cover(WeightedGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}})).cover == std::vector<Vertex>{0, 1});
  CHECK(exact_vertex_cover(WeightedGraph(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}})).cover == std::vector<Vertex>{0});
  CHECK(exact_vertex_cover(WeightedGraph(3, {})).cover.empty());
  CHECK(exact_vertex_cover(WeightedGraph(0, {})).cover.empty());
  CHECK_THROWS_AS(exact_vertex_cover(WeightedGraph(26, {})), CapExceeded);
  CHECK_NOTHROW(exact_vertex_cover(WeightedGraph(26, {}), 30));
}

TEST_CASE("property: approx <= 2 * exact, exact equals enumeration, size = 2|matching|") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 12;
    const WeightedGraph g = oracle::random_graph(rng, n, 0.1 + 0.1 * (trial % 7));
    const auto approx = approx_vertex_cover(g);
    const auto exact = exact_vertex_cover(g);
    REQUIRE(is_vertex_cover(g, approx.cover));
    REQUIRE(is_vertex_cover(g, exact.cover));
    REQUIRE(approx.size() <= 2 * exact.size());
    REQUIRE(approx.size() == 2 * greedy_maximal_matching(g).size());
    REQUIRE(exact.cover == oracle::vertex_cover(g));
    // Matching endpoints and the loop's cover coincide.
    std::vector<Vertex> ends;
    for (const Edge& e : greedy_maximal_matching(g)) {
      ends.push_back(e.u);
      ends.push_back(e.v);
    }
    std::sort(ends.begin(), ends.end());
    REQUIRE(ends == approx.cover);
    // Minimality witness: dropping any vertex uncovers an edge.
    for (std::size_t k = 0; k < exact.cover.size(); ++k) {
      auto smaller = exact.cover;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
      REQUIRE_FALSE(is_vertex_cover(g, smaller));
    }
  }
}

TEST_CASE("exact cover handles a 25-vertex sparse graph") {
  std::mt19937_64 rng(4);
  const WeightedGraph g = oracle::random_graph(rng, 25, 0.15);
  const auto exact = exact_vertex_cover(g);
  CHECK(is_vertex_cover(g, exact.cover));
  CHECK(approx_vertex_cover(g).size() <= 2 * exact.size());
}
