#pragma once

#include <span>
#include <vector>

#include "approx/graph_algos.hpp"
#include "approx/instance.hpp"
#include "approx/trace.hpp"

namespace approx {

struct Tour {
  std::vector<Vertex> order;
  double cost = 0.0;

  friend bool operator==(const Tour&, const Tour&) = default;
};

// Raised when the metric breaks the triangle inequality and the caller did
// not force the run.
class TriangleInequalityError : public InputError {
 public:
  explicit TriangleInequalityError(TriangleViolation violation);
  const TriangleViolation& violation() const noexcept { return violation_; }

 private:
  TriangleViolation violation_;
};

struct TspOptions {
  Vertex root = 0;
  // Run even when the triangle inequality fails (the 2x bound is then void).
  bool force = false;
};

inline constexpr int kDefaultHeldKarpCap = 18;

// Closed-cycle cost; throws InputError unless `order` is a permutation.
double evaluate_tour(const MetricInstance& metric, std::span<const Vertex> order);

// Preorder walk of the Prim tree rooted at options.root.
Tour approx_tsp_tour(const MetricInstance& metric, const TspOptions& options = {}, TraceRecorder* trace = nullptr);

/// Bitmask dynamic program over subsets, O(n^2 2^n). The tour starts at 0;
/// ties in the table resolve to the lower vertex id.
///
/// Trace: one dp-cell-set per full-subset end cell, then edge-picked along
/// the reconstructed tour.
Tour held_karp(const MetricInstance& metric, int max_vertices = kDefaultHeldKarpCap, TraceRecorder* trace = nullptr);

}  // namespace approx
