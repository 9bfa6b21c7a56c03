#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "approx/document.hpp"
#include "approx/outcome.hpp"

namespace approx {

inline constexpr int kTraceFormatVersion = 1;

enum class EventKind {
  EdgePicked,
  EdgesRemoved,
  VertexAddedToCover,
  MstEdgeAdded,
  PreorderVisit,
  ListMerged,
  ListTrimmed,
  ElementDropped,
  DpCellSet,
  ItemTaken,
  Backtrack,
};

std::string_view to_string(EventKind kind);
// Throws InputError on an unknown tag.
EventKind parse_event_kind(std::string_view name);

struct TraceEvent {
  std::size_t index = 0;
  EventKind kind = EventKind::EdgePicked;
  Json payload = Json::object();

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct TraceLimits {
  std::size_t max_events = 10'000;
  std::size_t snapshot_cap = 64;
};

/// Collects the step events of one algorithm run.
///
/// Solvers take a nullable `TraceRecorder*`; with no recorder they run the
/// identical code path and skip only the event construction. Once
/// `max_events` is reached further events are dropped and the log is marked
/// truncated.
class TraceRecorder {
 public:
  explicit TraceRecorder(TraceLimits limits = {}) : limits_(limits) {}

  void record(EventKind kind, Json payload);

  // Array of at most snapshot_cap values. Longer inputs keep the first
  // cap-1 values followed by the string marker "...(+K)" for K elided ones.
  Json snapshot(std::span<const std::int64_t> values) const;

  const TraceLimits& limits() const noexcept { return limits_; }
  bool truncated() const noexcept { return truncated_; }
  std::vector<TraceEvent> take_events() { return std::move(events_); }
  std::span<const TraceEvent> events() const noexcept { return events_; }

 private:
  TraceLimits limits_;
  std::vector<TraceEvent> events_;
  bool truncated_ = false;
};

struct TraceLog {
  Problem problem = Problem::VertexCover;
  Algorithm algorithm = Algorithm::VertexCoverApprox;
  std::string digest;
  std::vector<TraceEvent> events;
  SolveOutcome final_outcome;
  bool truncated = false;

  friend bool operator==(const TraceLog&, const TraceLog&) = default;
};

Json to_json(const TraceLog& log);
// Parses a trace document; throws InputError on malformed structure,
// unknown event kinds or an index gap.
TraceLog trace_from_json(const Json& doc);

struct Replay {
  std::vector<std::int64_t> certificate;
  // Reconstructed objective value when the event stream carries it.
  std::optional<double> value;
};

// Rebuilds the certificate from the event stream alone. Throws InputError if
// the log is truncated, has an index gap, or an event is inconsistent with
// the algorithm's vocabulary.
Replay replay_trace(const TraceLog& log);

}  // namespace approx
