#pragma once

#include <optional>
#include <vector>

#include "approx/instance.hpp"
#include "approx/trace.hpp"

namespace approx {

inline constexpr double kTriangleTolerance = 1e-9;

struct SpanningTree {
  Vertex root = 0;
  // parent[v] for every vertex; parent[root] == -1.
  std::vector<Vertex> parent;
  double total_cost = 0.0;
  // Tree edges (parent, child) in the order Prim attached them.
  std::vector<std::pair<Vertex, Vertex>> attach_order;

  int n() const noexcept { return static_cast<int>(parent.size()); }
};

/// Array-based Prim, O(n^2). Among equal-cost frontier edges the one with
/// the smallest (new vertex, tree vertex) pair wins.
///
/// Emits one mst-edge-added event per attached vertex.
SpanningTree mst_prim(const MetricInstance& metric, Vertex root, TraceRecorder* trace = nullptr);
// Throws InputError if the graph is disconnected or root is out of range.
SpanningTree mst_prim(const WeightedGraph& graph, Vertex root, TraceRecorder* trace = nullptr);

// Root first, children in ascending id. Emits preorder-visit per vertex.
std::vector<Vertex> preorder_walk(const SpanningTree& tree, TraceRecorder* trace = nullptr);

struct TriangleViolation {
  // cost(u, v) > cost(u, w) + cost(w, v) + tolerance
  Vertex u = 0;
  Vertex w = 0;
  Vertex v = 0;

  friend bool operator==(const TriangleViolation&, const TriangleViolation&) = default;
};

// First violating triple in lexicographic (u, w, v) order, or nullopt.
std::optional<TriangleViolation> check_triangle_inequality(const MetricInstance& metric,
                                                           double tolerance = kTriangleTolerance);

inline constexpr int kDefaultHamiltonianCap = 20;

/// Backtracking search from vertex 0, extending the path with neighbours in
/// ascending id. Returns the first cycle found, or nullopt.
///
/// Trace: edge-picked when the path grows, backtrack when it shrinks, and a
/// final edge-picked with "closing": true for the edge back to 0.
std::optional<std::vector<Vertex>> find_hamiltonian_cycle(const WeightedGraph& graph,
                                                          int max_vertices = kDefaultHamiltonianCap,
                                                          TraceRecorder* trace = nullptr);

// Scans edges in canonical order, keeping each edge disjoint from those
// already kept.
std::vector<Edge> greedy_maximal_matching(const WeightedGraph& graph);

}  // namespace approx
