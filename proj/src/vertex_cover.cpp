#include "approx/vertex_cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace approx {

VertexCoverSolution approx_vertex_cover(const WeightedGraph& graph, TraceRecorder* trace) {
  const auto edges = graph.edges();
  std::vector<bool> alive(edges.size(), true);  // E'
  std::vector<bool> in_cover(static_cast<std::size_t>(graph.n()), false);
  VertexCoverSolution solution;

  std::size_t cursor = 0;
  while (true) {
    while (cursor < edges.size() && !alive[cursor]) ++cursor;
    if (cursor == edges.size()) break;
    const Edge picked = edges[cursor];
    if (trace) trace->record(EventKind::EdgePicked, Json{{"u", picked.u}, {"v", picked.v}});
    for (Vertex x : {picked.u, picked.v}) {
      in_cover[static_cast<std::size_t>(x)] = true;
      if (trace) trace->record(EventKind::VertexAddedToCover, Json{{"vertex", x}});
    }
    Json removed = Json::array();
    alive[cursor] = false;
    for (Vertex x : {picked.u, picked.v}) {
      for (std::size_t idx : graph.incident(x)) {
        if (!alive[idx]) continue;
        alive[idx] = false;
        if (trace) removed.push_back(Json::array({edges[idx].u, edges[idx].v}));
      }
    }
    if (trace) trace->record(EventKind::EdgesRemoved, Json{{"edges", std::move(removed)}});
  }

  for (Vertex v = 0; v < graph.n(); ++v) {
    if (in_cover[static_cast<std::size_t>(v)]) solution.cover.push_back(v);
  }
  return solution;
}

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << static_cast<unsigned>(v); }

class CoverSearch {
 public:
  explicit CoverSearch(const WeightedGraph& graph) : graph_(graph), neighbours_(static_cast<std::size_t>(graph.n()), 0) {
    for (const Edge& e : graph.edges()) {
      neighbours_[static_cast<std::size_t>(e.u)] |= bit(e.v);
      neighbours_[static_cast<std::size_t>(e.v)] |= bit(e.u);
    }
  }

  // Fixing v out forces all its neighbours in; false if one is already out.
  bool exclude(Mask& in, Mask& out, Vertex v) const {
    const Mask nb = neighbours_[static_cast<std::size_t>(v)];
    if (nb & out) return false;
    out |= bit(v);
    in |= nb;
    return true;
  }

  // Smallest cover containing `in` and avoiding `out`, if smaller than
  // `best`; otherwise returns `best`. Invariant: every neighbour of an `out`
  // vertex is in `in`.
  int minimum(Mask in, Mask out, int best) const {
    const int taken = std::popcount(in);
    const Edge* branch_edge = nullptr;
    int matching = 0;
    Mask matched = 0;
    for (const Edge& e : graph_.edges()) {
      const Mask ends = bit(e.u) | bit(e.v);
      if (in & ends) continue;
      if (!branch_edge) branch_edge = &e;
      if (!(matched & ends)) {
        matched |= ends;
        ++matching;
      }
    }
    if (!branch_edge) return std::min(best, taken);
    if (taken + matching >= best) return best;

    const Vertex u = branch_edge->u;
    best = minimum(in | bit(u), out, best);
    Mask in2 = in;
    Mask out2 = out;
    if (exclude(in2, out2, u)) best = minimum(in2, out2, best);
    return best;
  }

 private:
  const WeightedGraph& graph_;
  std::vector<Mask> neighbours_;
};

}  // namespace

VertexCoverSolution exact_vertex_cover(const WeightedGraph& graph, int max_vertices, TraceRecorder* trace) {
  const int n = graph.n();
  if (n > max_vertices) throw CapExceeded("exact vertex cover vertex", max_vertices, n);
  if (n > 64) throw CapExceeded("exact vertex cover vertex", 64, n);

  const CoverSearch search(graph);
  const int optimum = search.minimum(0, 0, n + 1);

  Mask in = 0;
  Mask out = 0;
  for (Vertex v = 0; v < n; ++v) {
    if ((in | out) & bit(v)) continue;
    if (search.minimum(in | bit(v), out, optimum + 1) == optimum) {
      in |= bit(v);
      if (trace) trace->record(EventKind::VertexAddedToCover, Json{{"vertex", v}});
      continue;
    }
    const Mask before = in;
    search.exclude(in, out, v);
    if (trace) {
      trace->record(EventKind::Backtrack, Json{{"vertex", v}, {"excluded", true}});
      for (Vertex w = 0; w < n; ++w) {
        if ((in & ~before) & bit(w)) trace->record(EventKind::VertexAddedToCover, Json{{"vertex", w}, {"forced_by", v}});
      }
    }
  }

  VertexCoverSolution solution;
  for (Vertex v = 0; v < n; ++v) {
    if (in & bit(v)) solution.cover.push_back(v);
  }
  return solution;
}

bool is_vertex_cover(const WeightedGraph& graph, const std::vector<Vertex>& cover) {
  std::vector<bool> member(static_cast<std::size_t>(graph.n()), false);
  for (Vertex v : cover) {
    if (v < 0 || v >= graph.n()) return false;
    member[static_cast<std::size_t>(v)] = true;
  }
  return std::all_of(graph.edges().begin(), graph.edges().end(), [&member](const Edge& e) {
    return member[static_cast<std::size_t>(e.u)] || member[static_cast<std::size_t>(e.v)];
  });
}

}  // namespace approx
