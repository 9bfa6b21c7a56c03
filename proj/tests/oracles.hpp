#pragma once

// Brute-force references used only by the test suites. They share no code
// with the solvers they check beyond the instance types.

#include <algorithm>
#include <bit>
#include <span>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "approx/instance.hpp"

namespace approx::oracle {

// Minimum cover by enumerating all 2^n vertex subsets; ties go to the
// lexicographically smallest sorted vertex list.
inline std::vector<Vertex> vertex_cover(const WeightedGraph& g) {
  const int n = g.n();
  std::vector<Vertex> best;
  bool found = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool covers = true;
    for (const Edge& e : g.edges()) {
      if (!((mask >> e.u) & 1) && !((mask >> e.v) & 1)) {
        covers = false;
        break;
      }
    }
    if (!covers) continue;
    std::vector<Vertex> set;
    for (Vertex v = 0; v < n; ++v) {
      if ((mask >> v) & 1) set.push_back(v);
    }
    if (!found || set.size() < best.size() || (set.size() == best.size() && set < best)) {
      best = set;
      found = true;
    }
  }
  return best;
}

// Optimal closed tour by enumerating every permutation with vertex 0 fixed.
inline double tsp(const MetricInstance& m) {
  const int n = m.n();
  if (n == 1) return 0.0;
  std::vector<Vertex> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  double best = std::numeric_limits<double>::infinity();
  do {
    double c = m.cost(0, rest.front()) + m.cost(rest.back(), 0);
    for (std::size_t i = 0; i + 1 < rest.size(); ++i) c += m.cost(rest[i], rest[i + 1]);
    best = std::min(best, c);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

inline std::int64_t subset_sum(const SubsetSumInstance& s) {
  const auto set = s.set();
  std::int64_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << set.size()); ++mask) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if ((mask >> i) & 1) sum += set[i];
    }
    if (sum <= s.target()) best = std::max(best, sum);
  }
  return best;
}

// All achievable subset sums (with 0), ascending and deduplicated.
inline std::vector<std::int64_t> achievable_sums(std::span<const std::int64_t> set) {
  std::vector<std::int64_t> sums;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << set.size()); ++mask) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if ((mask >> i) & 1) sum += set[i];
    }
    sums.push_back(sum);
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

inline std::int64_t knapsack(const KnapsackInstance& k) {
  const auto items = k.items();
  std::int64_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << items.size()); ++mask) {
    std::int64_t v = 0, w = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if ((mask >> i) & 1) {
        v += items[i].value;
        w += items[i].weight;
      }
    }
    if (w <= k.capacity()) best = std::max(best, v);
  }
  return best;
}

// Minimum spanning tree cost over all (n-1)-edge subsets that connect the
// graph; +inf if disconnected.
inline double spanning_tree(const WeightedGraph& g) {
  const int n = g.n();
  if (n <= 1) return 0.0;
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) != n - 1) continue;
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    double cost = 0.0;
    bool acyclic = true;
    for (std::size_t i = 0; i < m && acyclic; ++i) {
      if (!((mask >> i) & 1)) continue;
      const int a = find(edges[i].u), b = find(edges[i].v);
      if (a == b) acyclic = false;
      parent[static_cast<std::size_t>(a)] = b;
      cost += edges[i].w;
    }
    if (acyclic) best = std::min(best, cost);
  }
  return best;
}

inline bool hamiltonian(const WeightedGraph& g) {
  const int n = g.n();
  if (n < 3) return false;
  std::vector<Vertex> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  do {
    bool ok = g.has_edge(0, rest.front()) && g.has_edge(rest.back(), 0);
    for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = g.has_edge(rest[i], rest[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

// Hand-rolled generators for property tests.
inline WeightedGraph random_graph(std::mt19937_64& rng, int n, double p, int max_weight = 1) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (std::uniform_real_distribution<double>(0, 1)(rng) < p) {
        edges.push_back({u, v, static_cast<double>(std::uniform_int_distribution<int>(1, max_weight)(rng))});
      }
    }
  }
  return WeightedGraph(n, std::move(edges));
}

inline MetricInstance random_euclidean(std::mt19937_64& rng, int n, double box = 100.0) {
  std::vector<std::pair<double, double>> pts;
  std::uniform_real_distribution<double> coord(0.0, box);
  for (int i = 0; i < n; ++i) pts.emplace_back(coord(rng), coord(rng));
  std::vector<std::vector<double>> cost(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      cost[i][j] = cost[j][i] = std::sqrt((pts[i].first - pts[j].first) * (pts[i].first - pts[j].first) +
                                          (pts[i].second - pts[j].second) * (pts[i].second - pts[j].second));
    }
  }
  return MetricInstance(std::move(cost));
}

inline SubsetSumInstance random_subset_sum(std::mt19937_64& rng, int n, std::int64_t max_value) {
  std::vector<std::int64_t> set;
  std::int64_t sum = 0;
  for (int i = 0; i < n; ++i) {
    set.push_back(std::uniform_int_distribution<std::int64_t>(1, max_value)(rng));
    sum += set.back();
  }
  const std::int64_t t = std::uniform_int_distribution<std::int64_t>(1, std::max<std::int64_t>(1, sum))(rng);
  return SubsetSumInstance(std::move(set), t);
}

inline KnapsackInstance random_knapsack(std::mt19937_64& rng, int n, std::int64_t max_value, std::int64_t max_weight) {
  std::vector<Item> items;
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) {
    items.push_back({std::uniform_int_distribution<std::int64_t>(1, max_value)(rng),
                     std::uniform_int_distribution<std::int64_t>(1, max_weight)(rng)});
    total += items.back().weight;
  }
  return KnapsackInstance(std::move(items), std::uniform_int_distribution<std::int64_t>(0, total)(rng));
}

}  // namespace approx::oracle
