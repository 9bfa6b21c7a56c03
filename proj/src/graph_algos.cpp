#include "approx/graph_algos.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>

namespace approx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// cost(u, v) returns kInf for a missing edge.
template <typename CostFn>
SpanningTree prim(int n, Vertex root, CostFn cost, TraceRecorder* trace) {
  if (root < 0 || root >= n) {
    throw InputError("root " + std::to_string(root) + " out of range for n=" + std::to_string(n));
  }
  const auto N = static_cast<std::size_t>(n);
  SpanningTree tree;
  tree.root = root;
  tree.parent.assign(N, -1);

  std::vector<double> key(N, kInf);
  std::vector<bool> in_tree(N, false);
  key[static_cast<std::size_t>(root)] = 0.0;

  for (int step = 0; step < n; ++step) {
    Vertex next = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (in_tree[static_cast<std::size_t>(v)]) continue;
      if (next == -1 || key[static_cast<std::size_t>(v)] < key[static_cast<std::size_t>(next)]) next = v;
    }
    const auto nx = static_cast<std::size_t>(next);
    if (key[nx] == kInf) throw InputError("graph is disconnected; no spanning tree exists");
    in_tree[nx] = true;
    if (next != root) {
      const Vertex p = tree.parent[nx];
      tree.total_cost += key[nx];
      tree.attach_order.emplace_back(p, next);
      if (trace) trace->record(EventKind::MstEdgeAdded, Json{{"parent", p}, {"child", next}, {"cost", key[nx]}});
    }
    for (Vertex v = 0; v < n; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (in_tree[vi]) continue;
      const double c = cost(next, v);
      // Ties keep the smaller tree vertex; `next` only wins a tie when it is smaller.
      if (c < key[vi] || (c == key[vi] && c != kInf && next < tree.parent[vi])) {
        key[vi] = c;
        tree.parent[vi] = next;
      }
    }
  }
  return tree;
}

}  // namespace

SpanningTree mst_prim(const MetricInstance& metric, Vertex root, TraceRecorder* trace) {
  return prim(metric.n(), root, [&metric](Vertex a, Vertex b) { return metric.cost(a, b); }, trace);
}

SpanningTree mst_prim(const WeightedGraph& graph, Vertex root, TraceRecorder* trace) {
  const auto N = static_cast<std::size_t>(graph.n());
  std::vector<double> matrix(N * N, kInf);
  for (const Edge& e : graph.edges()) {
    matrix[static_cast<std::size_t>(e.u) * N + static_cast<std::size_t>(e.v)] = e.w;
    matrix[static_cast<std::size_t>(e.v) * N + static_cast<std::size_t>(e.u)] = e.w;
  }
  return prim(graph.n(), root,
              [&matrix, N](Vertex a, Vertex b) {
                return matrix[static_cast<std::size_t>(a) * N + static_cast<std::size_t>(b)];
              },
              trace);
}

std::vector<Vertex> preorder_walk(const SpanningTree& tree, TraceRecorder* trace) {
  const int n = tree.n();
  std::vector<std::vector<Vertex>> children(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const Vertex p = tree.parent[static_cast<std::size_t>(v)];
    if (p >= 0) children[static_cast<std::size_t>(p)].push_back(v);
  }
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  if (n == 0) return order;
  // Children lists are already ascending; push in reverse so the smallest pops first.
  std::vector<Vertex> stack{tree.root};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    if (trace) trace->record(EventKind::PreorderVisit, Json{{"vertex", v}});
    const auto& kids = children[static_cast<std::size_t>(v)];
    stack.insert(stack.end(), kids.rbegin(), kids.rend());
  }
  return order;
}

std::optional<TriangleViolation> check_triangle_inequality(const MetricInstance& metric, double tolerance) {
  const int n = metric.n();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = 0; w < n; ++w) {
      for (Vertex v = 0; v < n; ++v) {
        if (metric.cost(u, v) > metric.cost(u, w) + metric.cost(w, v) + tolerance) {
          return TriangleViolation{u, w, v};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

class HamiltonianSearch {
 public:
  HamiltonianSearch(const WeightedGraph& graph, TraceRecorder* trace)
      : n_(graph.n()), adjacency_(static_cast<std::size_t>(n_)), adjacent_(static_cast<std::size_t>(n_) * n_, false),
        visited_(static_cast<std::size_t>(n_), false), trace_(trace) {
    for (const Edge& e : graph.edges()) {
      adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
      adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
      adjacent_[index(e.u, e.v)] = adjacent_[index(e.v, e.u)] = true;
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  }

  std::optional<std::vector<Vertex>> run() {
    for (const auto& list : adjacency_) {
      if (list.size() < 2) return std::nullopt;
    }
    path_.push_back(0);
    visited_[0] = true;
    if (!extend()) return std::nullopt;
    if (trace_) trace_->record(EventKind::EdgePicked, Json{{"u", path_.back()}, {"v", 0}, {"closing", true}});
    return path_;
  }

 private:
  std::size_t index(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }

  // Every unvisited vertex still needs two usable neighbours: unvisited ones,
  // the current path end, or the start vertex.
  bool degree_feasible() const {
    const Vertex end = path_.back();
    for (Vertex v = 0; v < n_; ++v) {
      if (visited_[static_cast<std::size_t>(v)]) continue;
      int usable = 0;
      for (Vertex w : adjacency_[static_cast<std::size_t>(v)]) {
        if (!visited_[static_cast<std::size_t>(w)] || w == end || w == 0) {
          if (++usable == 2) break;
        }
      }
      if (usable < 2) return false;
    }
    return true;
  }

  bool extend() {
    const Vertex end = path_.back();
    if (static_cast<int>(path_.size()) == n_) return adjacent_[index(end, 0)];
    if (!degree_feasible()) return false;
    for (Vertex next : adjacency_[static_cast<std::size_t>(end)]) {
      if (visited_[static_cast<std::size_t>(next)]) continue;
      visited_[static_cast<std::size_t>(next)] = true;
      path_.push_back(next);
      if (trace_) trace_->record(EventKind::EdgePicked, Json{{"u", end}, {"v", next}});
      if (extend()) return true;
      path_.pop_back();
      visited_[static_cast<std::size_t>(next)] = false;
      if (trace_) trace_->record(EventKind::Backtrack, Json{{"vertex", next}});
    }
    return false;
  }

  int n_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<bool> adjacent_;
  std::vector<bool> visited_;
  std::vector<Vertex> path_;
  TraceRecorder* trace_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_hamiltonian_cycle(const WeightedGraph& graph, int max_vertices,
                                                          TraceRecorder* trace) {
  if (graph.n() > max_vertices) throw CapExceeded("hamiltonian search vertex", max_vertices, graph.n());
  if (graph.n() < 3) return std::nullopt;
  return HamiltonianSearch(graph, trace).run();
}

std::vector<Edge> greedy_maximal_matching(const WeightedGraph& graph) {
  std::vector<bool> matched(static_cast<std::size_t>(graph.n()), false);
  std::vector<Edge> matching;
  for (const Edge& e : graph.edges()) {
    if (matched[static_cast<std::size_t>(e.u)] || matched[static_cast<std::size_t>(e.v)]) continue;
    matched[static_cast<std::size_t>(e.u)] = matched[static_cast<std::size_t>(e.v)] = true;
    matching.push_back(e);
  }
  return matching;
}

}  // namespace approx
