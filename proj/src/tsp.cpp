#include "approx/tsp.hpp"

#include <cstdint>
#include <limits>
#include <string>

namespace approx {

TriangleInequalityError::TriangleInequalityError(TriangleViolation violation)
    : InputError("triangle inequality violated: cost(" + std::to_string(violation.u) + "," +
                 std::to_string(violation.v) + ") > cost(" + std::to_string(violation.u) + "," +
                 std::to_string(violation.w) + ") + cost(" + std::to_string(violation.w) + "," +
                 std::to_string(violation.v) + ")"),
      violation_(violation) {}

double evaluate_tour(const MetricInstance& metric, std::span<const Vertex> order) {
  const int n = metric.n();
  if (static_cast<int>(order.size()) != n) throw InputError("tour length differs from vertex count");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw InputError("tour is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
  double cost = 0.0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    cost += metric.cost(order[i], order[(i + 1) % order.size()]);
  }
  return cost;
}

Tour approx_tsp_tour(const MetricInstance& metric, const TspOptions& options, TraceRecorder* trace) {
  if (options.root < 0 || options.root >= metric.n()) {
    throw InputError("root " + std::to_string(options.root) + " out of range for n=" + std::to_string(metric.n()));
  }
  if (!options.force) {
    if (auto violation = check_triangle_inequality(metric)) throw TriangleInequalityError(*violation);
  }
  const SpanningTree tree = mst_prim(metric, options.root, trace);
  Tour tour;
  tour.order = preorder_walk(tree, trace);
  tour.cost = evaluate_tour(metric, tour.order);
  return tour;
}

Tour held_karp(const MetricInstance& metric, int max_vertices, TraceRecorder* trace) {
  const int n = metric.n();
  if (n > max_vertices) throw CapExceeded("held-karp vertex", max_vertices, n);
  if (n > 30) throw CapExceeded("held-karp vertex", 30, n);
  if (n == 1) return Tour{{0}, 0.0};

  // City k (1..n-1) is bit k-1; dp[mask * m + j] ends at city j+1.
  const int m = n - 1;
  const std::size_t subsets = std::size_t{1} << m;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dp(subsets * static_cast<std::size_t>(m), kInf);
  std::vector<std::int8_t> parent(subsets * static_cast<std::size_t>(m), -1);
  auto cell = [m](std::size_t mask, int j) { return mask * static_cast<std::size_t>(m) + static_cast<std::size_t>(j); };

  for (int j = 0; j < m; ++j) dp[cell(std::size_t{1} << j, j)] = metric.cost(0, j + 1);
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const std::size_t prev = mask & ~(std::size_t{1} << j);
      if (prev == 0) continue;
      double best = kInf;
      int arg = -1;
      for (int k = 0; k < m; ++k) {
        if (!(prev & (std::size_t{1} << k))) continue;
        const double c = dp[cell(prev, k)] + metric.cost(k + 1, j + 1);
        if (c < best) {
          best = c;
          arg = k;
        }
      }
      dp[cell(mask, j)] = best;
      parent[cell(mask, j)] = static_cast<std::int8_t>(arg);
    }
  }

  const std::size_t full = subsets - 1;
  double best = kInf;
  int last = -1;
  for (int j = 0; j < m; ++j) {
    const double c = dp[cell(full, j)] + metric.cost(j + 1, 0);
    if (trace) {
      trace->record(EventKind::DpCellSet, Json{{"mask", full}, {"end", j + 1}, {"cost", dp[cell(full, j)]}, {"closed", c}});
    }
    if (c < best) {
      best = c;
      last = j;
    }
  }

  std::vector<Vertex> reversed;
  std::size_t mask = full;
  for (int j = last; j >= 0;) {
    reversed.push_back(j + 1);
    const int p = parent[cell(mask, j)];
    mask &= ~(std::size_t{1} << j);
    j = p;
  }
  Tour tour;
  tour.order.push_back(0);
  tour.order.insert(tour.order.end(), reversed.rbegin(), reversed.rend());
  tour.cost = evaluate_tour(metric, tour.order);
  if (trace) {
    for (std::size_t i = 0; i + 1 < tour.order.size(); ++i) {
      trace->record(EventKind::EdgePicked, Json{{"u", tour.order[i]}, {"v", tour.order[i + 1]}});
    }
    trace->record(EventKind::EdgePicked, Json{{"u", tour.order.back()}, {"v", 0}, {"closing", true}});
  }
  return tour;
}

}  // namespace approx
