#include "approx/knapsack.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace approx {

KnapsackSolution evaluate_selection(const KnapsackInstance& instance, std::vector<std::size_t> chosen) {
  std::sort(chosen.begin(), chosen.end());
  KnapsackSolution solution;
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    if (chosen[k] >= instance.size()) throw InputError("item index " + std::to_string(chosen[k]) + " out of range");
    if (k > 0 && chosen[k] == chosen[k - 1]) throw InputError("item index " + std::to_string(chosen[k]) + " repeated");
    solution.total_value += instance.items()[chosen[k]].value;
    solution.total_weight += instance.items()[chosen[k]].weight;
  }
  solution.chosen = std::move(chosen);
  return solution;
}

namespace {

void check_cells(std::int64_t rows, std::int64_t columns, std::int64_t max_cells) {
  // rows * columns without overflow.
  if (rows > 0 && columns > max_cells / rows) {
    const long double requested = static_cast<long double>(rows) * static_cast<long double>(columns);
    throw CapExceeded("knapsack DP cell", max_cells,
                      requested > static_cast<long double>(std::numeric_limits<long long>::max())
                          ? std::numeric_limits<long long>::max()
                          : static_cast<long long>(requested));
  }
}

void record_taken(TraceRecorder* trace, const KnapsackInstance& instance, std::size_t index, const char* branch) {
  if (!trace) return;
  Json payload{{"index", index}, {"value", instance.items()[index].value}, {"weight", instance.items()[index].weight}};
  if (branch) payload["branch"] = branch;
  trace->record(EventKind::ItemTaken, std::move(payload));
}

}  // namespace

KnapsackSolution knapsack_exact(const KnapsackInstance& instance, std::int64_t max_cells, TraceRecorder* trace) {
  const auto items = instance.items();
  const std::int64_t capacity = instance.capacity();
  const auto n = static_cast<std::int64_t>(items.size());
  check_cells(n, capacity + 1, max_cells);

  const auto width = static_cast<std::size_t>(capacity + 1);
  std::vector<std::int64_t> best(width, 0);
  std::vector<bool> take(items.size() * width, false);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto w = items[i].weight;
    for (std::int64_t c = capacity; c >= w; --c) {
      const std::int64_t with = best[static_cast<std::size_t>(c - w)] + items[i].value;
      if (with > best[static_cast<std::size_t>(c)]) {
        best[static_cast<std::size_t>(c)] = with;
        take[i * width + static_cast<std::size_t>(c)] = true;
      }
    }
    if (trace) trace->record(EventKind::DpCellSet, Json{{"item", i}, {"capacity", capacity}, {"value", best.back()}});
  }

  std::vector<std::size_t> chosen;
  std::int64_t c = capacity;
  for (std::size_t i = items.size(); i-- > 0;) {
    if (!take[i * width + static_cast<std::size_t>(c)]) continue;
    chosen.push_back(i);
    c -= items[i].weight;
    record_taken(trace, instance, i, nullptr);
  }
  return evaluate_selection(instance, std::move(chosen));
}

KnapsackSolution knapsack_greedy(const KnapsackInstance& instance, TraceRecorder* trace) {
  const auto items = instance.items();
  const std::int64_t capacity = instance.capacity();
  std::vector<std::size_t> fitting;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].weight <= capacity) fitting.push_back(i);
  }
  if (fitting.empty()) return {};

  // v_a / w_a > v_b / w_b, cross-multiplied; stable_sort keeps lower index first on ties.
  std::vector<std::size_t> order = fitting;
  std::stable_sort(order.begin(), order.end(), [&items](std::size_t a, std::size_t b) {
    return static_cast<__int128>(items[a].value) * items[b].weight >
           static_cast<__int128>(items[b].value) * items[a].weight;
  });

  std::vector<std::size_t> prefix;
  std::int64_t used = 0;
  std::int64_t prefix_value = 0;
  for (std::size_t i : order) {
    if (used + items[i].weight > capacity) break;
    used += items[i].weight;
    prefix_value += items[i].value;
    prefix.push_back(i);
    record_taken(trace, instance, i, "prefix");
  }

  std::size_t single = fitting.front();
  for (std::size_t i : fitting) {
    if (items[i].value > items[single].value) single = i;
  }
  if (items[single].value > prefix_value) {
    if (trace) trace->record(EventKind::Backtrack, Json{{"reason", "single-item-better"}, {"prefix_value", prefix_value}});
    record_taken(trace, instance, single, "single");
    return evaluate_selection(instance, {single});
  }
  return evaluate_selection(instance, std::move(prefix));
}

KnapsackSolution knapsack_fptas(const KnapsackInstance& instance, double epsilon, std::int64_t max_cells,
                                TraceRecorder* trace) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must satisfy 0 < epsilon < 1");
  const auto items = instance.items();
  const std::int64_t capacity = instance.capacity();
  std::vector<std::size_t> fitting;
  std::int64_t v_max = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].weight > capacity) continue;
    fitting.push_back(i);
    v_max = std::max(v_max, items[i].value);
  }
  if (fitting.empty()) return {};

  const double mu = std::max(1.0, epsilon * static_cast<double>(v_max) / static_cast<double>(items.size()));
  std::vector<std::int64_t> profit(fitting.size());
  for (std::size_t k = 0; k < fitting.size(); ++k) {
    profit[k] = static_cast<std::int64_t>(std::floor(static_cast<double>(items[fitting[k]].value) / mu));
  }
  const std::int64_t total = std::accumulate(profit.begin(), profit.end(), std::int64_t{0});
  check_cells(static_cast<std::int64_t>(fitting.size()), total + 1, max_cells);

  // min_weight[p]: lightest selection reaching scaled profit exactly p.
  constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();
  const auto width = static_cast<std::size_t>(total + 1);
  std::vector<std::int64_t> min_weight(width, kUnreachable);
  std::vector<bool> take(fitting.size() * width, false);
  min_weight[0] = 0;
  for (std::size_t k = 0; k < fitting.size(); ++k) {
    const std::int64_t w = items[fitting[k]].weight;
    for (std::int64_t p = total; p >= profit[k]; --p) {
      const std::int64_t from = min_weight[static_cast<std::size_t>(p - profit[k])];
      if (from == kUnreachable || from + w > capacity) continue;
      if (from + w < min_weight[static_cast<std::size_t>(p)]) {
        min_weight[static_cast<std::size_t>(p)] = from + w;
        take[k * width + static_cast<std::size_t>(p)] = true;
      }
    }
    if (trace) {
      std::int64_t reachable = 0;
      for (std::int64_t p = total; p >= 0; --p) {
        if (min_weight[static_cast<std::size_t>(p)] != kUnreachable) {
          reachable = p;
          break;
        }
      }
      trace->record(EventKind::DpCellSet, Json{{"item", fitting[k]}, {"scaled_profit", profit[k]}, {"mu", mu}, {"best_scaled", reachable}});
    }
  }

  std::int64_t p = total;
  while (min_weight[static_cast<std::size_t>(p)] == kUnreachable) --p;
  std::vector<std::size_t> chosen;
  for (std::size_t k = fitting.size(); k-- > 0;) {
    if (!take[k * width + static_cast<std::size_t>(p)]) continue;
    chosen.push_back(fitting[k]);
    p -= profit[k];
    record_taken(trace, instance, fitting[k], nullptr);
  }
  return evaluate_selection(instance, std::move(chosen));
}

}  // namespace approx
