#include "approx/subset_sum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace approx {

namespace {

void require_ascending(std::span<const std::int64_t> a, const char* name) {
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i - 1] >= a[i]) throw InputError(std::string(name) + " is not strictly ascending at position " + std::to_string(i));
  }
}

// Elements of `before` missing from `after` (both ascending, after ⊆ before).
std::vector<std::int64_t> removed_elements(const ValueList& before, const ValueList& after) {
  std::vector<std::int64_t> out;
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(), std::back_inserter(out));
  return out;
}

// Drops the suffix above t and reports it.
void drop_above(ValueList& list, std::int64_t t, std::size_t i, TraceRecorder* trace) {
  const auto cut = std::upper_bound(list.begin(), list.end(), t);
  if (trace) {
    const std::vector<std::int64_t> dropped(cut, list.end());
    trace->record(EventKind::ElementDropped, Json{{"i", i},
                                                  {"count", dropped.size()},
                                                  {"dropped", trace->snapshot(dropped)},
                                                  {"size", static_cast<std::size_t>(cut - list.begin())},
                                                  {"max", *(cut - 1)}});
  }
  list.erase(cut, list.end());
}

void record_merge(TraceRecorder* trace, std::size_t i, std::int64_t x, const ValueList& merged) {
  if (!trace) return;
  trace->record(EventKind::ListMerged,
                Json{{"i", i}, {"x", x}, {"size", merged.size()}, {"max", merged.back()}, {"values", trace->snapshot(merged)}});
}

}  // namespace

ValueList merge_lists(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  require_ascending(a, "first list");
  require_ascending(b, "second list");
  ValueList out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ValueList shift_list(std::span<const std::int64_t> a, std::int64_t x) {
  ValueList out(a.begin(), a.end());
  for (auto& v : out) v += x;
  return out;
}

ValueList trim(std::span<const std::int64_t> a, double delta) {
  if (!(delta >= 0.0 && delta < 1.0)) throw InputError("trim parameter must satisfy 0 <= delta < 1");
  if (a.empty()) return {};
  ValueList out{a.front()};
  for (std::size_t i = 1; i < a.size(); ++i) {
    const auto y = a[i];
    if (static_cast<double>(y) > static_cast<double>(out.back()) * (1.0 + delta)) out.push_back(y);
  }
  if (out.back() != a.back()) out.push_back(a.back());
  return out;
}

SubsetSumResult exact_subset_sum(const SubsetSumInstance& instance, std::size_t max_list_length,
                                 TraceRecorder* trace, const ListObserver& observer) {
  const auto set = instance.set();
  const std::int64_t t = instance.target();
  std::vector<ValueList> lists{{0}};
  lists.reserve(set.size() + 1);

  for (std::size_t i = 1; i <= set.size(); ++i) {
    const ValueList& prev = lists.back();
    ValueList next = merge_lists(prev, shift_list(prev, set[i - 1]));
    record_merge(trace, i, set[i - 1], next);
    drop_above(next, t, i, trace);
    if (next.size() > max_list_length) {
      throw CapExceeded("subset-sum list length", static_cast<long long>(max_list_length),
                        static_cast<long long>(next.size()));
    }
    if (observer) observer(i, next);
    lists.push_back(std::move(next));
  }

  SubsetSumResult result;
  result.value = lists.back().back();
  std::int64_t remaining = result.value;
  for (std::size_t i = set.size(); i >= 1; --i) {
    const ValueList& without = lists[i - 1];
    if (std::binary_search(without.begin(), without.end(), remaining)) continue;
    remaining -= set[i - 1];
    result.subset.push_back(set[i - 1]);
    if (trace) trace->record(EventKind::ItemTaken, Json{{"index", i - 1}, {"element", set[i - 1]}});
  }
  std::reverse(result.subset.begin(), result.subset.end());
  return result;
}

SubsetSumResult approx_subset_sum(const SubsetSumInstance& instance, double epsilon, TraceRecorder* trace,
                                  const ListObserver& observer) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must satisfy 0 < epsilon < 1");
  const auto set = instance.set();
  const std::int64_t t = instance.target();
  if (set.empty()) return {};
  const double delta = epsilon / (2.0 * static_cast<double>(set.size()));

  ValueList list{0};
  for (std::size_t i = 1; i <= set.size(); ++i) {
    ValueList merged = merge_lists(list, shift_list(list, set[i - 1]));
    record_merge(trace, i, set[i - 1], merged);
    ValueList trimmed = trim(merged, delta);
    if (trace) {
      trace->record(EventKind::ListTrimmed, Json{{"i", i},
                                                 {"delta", delta},
                                                 {"before", merged.size()},
                                                 {"after", trimmed.size()},
                                                 {"removed", trace->snapshot(removed_elements(merged, trimmed))}});
    }
    drop_above(trimmed, t, i, trace);
    if (observer) observer(i, trimmed);
    list = std::move(trimmed);
  }
  return {list.back(), {}};
}

std::size_t fptas_list_bound(std::size_t n, std::int64_t target, double epsilon) {
  const double raw = 2.0 * static_cast<double>(n) * std::log(static_cast<double>(target)) / epsilon;
  return static_cast<std::size_t>(std::floor(raw)) + 2;
}

}  // namespace approx
