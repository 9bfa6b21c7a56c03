#pragma once

#include <vector>

#include "approx/instance.hpp"
#include "approx/trace.hpp"

namespace approx {

struct VertexCoverSolution {
  std::vector<Vertex> cover;  // ascending

  std::size_t size() const noexcept { return cover.size(); }
  friend bool operator==(const VertexCoverSolution&, const VertexCoverSolution&) = default;
};

inline constexpr int kDefaultVertexCoverCap = 25;

/// Matching-based 2-approximation. Repeatedly takes the smallest remaining
/// edge in canonical order, adds both endpoints, and deletes every edge
/// incident on either one.
///
/// Trace per picked edge: edge-picked, two vertex-added-to-cover, then
/// edges-removed listing the other deleted edges.
VertexCoverSolution approx_vertex_cover(const WeightedGraph& graph, TraceRecorder* trace = nullptr);

/// Exact minimum cover by branch and bound, lexicographically smallest among
/// the minimum covers. Throws CapExceeded above `max_vertices`.
///
/// The trace records the final per-vertex decisions: vertex-added-to-cover
/// when a vertex is fixed into the cover, backtrack when it is fixed out.
VertexCoverSolution exact_vertex_cover(const WeightedGraph& graph, int max_vertices = kDefaultVertexCoverCap,
                                       TraceRecorder* trace = nullptr);

bool is_vertex_cover(const WeightedGraph& graph, const std::vector<Vertex>& cover);

}  // namespace approx
