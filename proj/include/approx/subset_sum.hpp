#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "approx/instance.hpp"
#include "approx/trace.hpp"

namespace approx {

// Strictly ascending list of achievable sums.
using ValueList = std::vector<std::int64_t>;

// Sorted union without duplicates. Throws InputError unless both inputs are
// strictly ascending.
ValueList merge_lists(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

ValueList shift_list(std::span<const std::int64_t> a, std::int64_t x);

/// Scans ascending keeping the head, then keeps y iff y > last_kept * (1 + delta).
/// The list maximum is always retained. Throws InputError unless 0 <= delta < 1.
ValueList trim(std::span<const std::int64_t> a, double delta);

inline constexpr std::size_t kDefaultSubsetSumListCap = 1'000'000;

struct SubsetSumResult {
  std::int64_t value = 0;
  // Chosen elements, ascending. Empty for the approximation.
  std::vector<std::int64_t> subset;
};

// Called after each iteration i (1-based) with the final list L_i.
using ListObserver = std::function<void(std::size_t i, const ValueList& list)>;

/// Merge-and-filter list algorithm: the largest subset sum not exceeding t.
/// The witness prefers leaving out the highest-index element on ties.
/// Throws CapExceeded when a list would exceed `max_list_length`.
SubsetSumResult exact_subset_sum(const SubsetSumInstance& instance,
                                 std::size_t max_list_length = kDefaultSubsetSumListCap,
                                 TraceRecorder* trace = nullptr, const ListObserver& observer = {});

/// Trimmed variant with delta = epsilon / 2n: merge, trim, then drop
/// elements above t. Returns z* with OPT/(1+epsilon) <= z* <= OPT.
/// Throws InputError unless 0 < epsilon < 1.
SubsetSumResult approx_subset_sum(const SubsetSumInstance& instance, double epsilon,
                                  TraceRecorder* trace = nullptr, const ListObserver& observer = {});

// floor(2n ln t / epsilon) + 2: the trimmed list length limit.
std::size_t fptas_list_bound(std::size_t n, std::int64_t target, double epsilon);

}  // namespace approx
