#pragma once

#include <cstdint>
#include <vector>

#include "approx/instance.hpp"
#include "approx/trace.hpp"

namespace approx {

struct KnapsackSolution {
  std::vector<std::size_t> chosen;  // ascending item indices
  std::int64_t total_value = 0;
  std::int64_t total_weight = 0;

  friend bool operator==(const KnapsackSolution&, const KnapsackSolution&) = default;
};

inline constexpr std::int64_t kDefaultKnapsackCellCap = 100'000'000;

/// Weight-indexed dynamic program. The witness leaves out the highest-index
/// item whenever that does not lose value. Throws CapExceeded when
/// (capacity + 1) x items exceeds `max_cells`.
KnapsackSolution knapsack_exact(const KnapsackInstance& instance, std::int64_t max_cells = kDefaultKnapsackCellCap,
                                TraceRecorder* trace = nullptr);

/// Better of the density-ordered prefix (stopping at the first item that no
/// longer fits) and the single most valuable fitting item. Value >= OPT/2.
KnapsackSolution knapsack_greedy(const KnapsackInstance& instance, TraceRecorder* trace = nullptr);

/// Value-scaling scheme: profits v' = floor(v / mu) with
/// mu = max(1, epsilon * v_max / n), then a min-weight DP over scaled
/// profit. Value >= (1 - epsilon) OPT. Throws InputError unless 0 < epsilon < 1.
KnapsackSolution knapsack_fptas(const KnapsackInstance& instance, double epsilon,
                                std::int64_t max_cells = kDefaultKnapsackCellCap, TraceRecorder* trace = nullptr);

// Totals for an arbitrary index set. Throws InputError on a bad or repeated index.
KnapsackSolution evaluate_selection(const KnapsackInstance& instance, std::vector<std::size_t> chosen);

}  // namespace approx
