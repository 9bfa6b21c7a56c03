#include "approx/trace.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>

namespace approx {

namespace {

constexpr std::pair<EventKind, std::string_view> kEventNames[] = {
    {EventKind::EdgePicked, "edge-picked"},
    {EventKind::EdgesRemoved, "edges-removed"},
    {EventKind::VertexAddedToCover, "vertex-added-to-cover"},
    {EventKind::MstEdgeAdded, "mst-edge-added"},
    {EventKind::PreorderVisit, "preorder-visit"},
    {EventKind::ListMerged, "list-merged"},
    {EventKind::ListTrimmed, "list-trimmed"},
    {EventKind::ElementDropped, "element-dropped"},
    {EventKind::DpCellSet, "dp-cell-set"},
    {EventKind::ItemTaken, "item-taken"},
    {EventKind::Backtrack, "backtrack"},
};

}  // namespace

std::string_view to_string(EventKind kind) {
  for (const auto& [k, name] : kEventNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

EventKind parse_event_kind(std::string_view name) {
  for (const auto& [k, n] : kEventNames) {
    if (n == name) return k;
  }
  throw InputError("unknown trace event kind \"" + std::string(name) + "\"");
}

void TraceRecorder::record(EventKind kind, Json payload) {
  if (events_.size() >= limits_.max_events) {
    truncated_ = true;
    return;
  }
  events_.push_back(TraceEvent{events_.size(), kind, std::move(payload)});
}

Json TraceRecorder::snapshot(std::span<const std::int64_t> values) const {
  Json out = Json::array();
  const std::size_t cap = std::max<std::size_t>(limits_.snapshot_cap, 1);
  if (values.size() <= cap) {
    for (auto v : values) out.push_back(v);
    return out;
  }
  for (std::size_t i = 0; i + 1 < cap; ++i) out.push_back(values[i]);
  out.push_back("...(+" + std::to_string(values.size() - (cap - 1)) + ")");
  return out;
}

Json to_json(const TraceLog& log) {
  Json doc;
  doc["v"] = kTraceFormatVersion;
  doc["problem"] = std::string(to_string(log.problem));
  doc["algorithm"] = std::string(to_string(log.algorithm));
  doc["digest"] = log.digest;
  doc["truncated"] = log.truncated;
  Json events = Json::array();
  for (const TraceEvent& e : log.events) {
    events.push_back(Json{{"i", e.index}, {"kind", std::string(to_string(e.kind))}, {"payload", e.payload}});
  }
  doc["events"] = std::move(events);
  doc["outcome"] = to_json(log.final_outcome);
  return doc;
}

TraceLog trace_from_json(const Json& doc) {
  TraceLog log;
  try {
    if (doc.value("v", 0) != kTraceFormatVersion) throw InputError("unsupported trace format version");
    log.problem = parse_problem(doc.at("problem").get<std::string>());
    log.algorithm = parse_algorithm(doc.at("algorithm").get<std::string>());
    log.digest = doc.at("digest").get<std::string>();
    log.truncated = doc.at("truncated").get<bool>();
    for (const Json& e : doc.at("events")) {
      TraceEvent ev;
      ev.index = e.at("i").get<std::size_t>();
      ev.kind = parse_event_kind(e.at("kind").get<std::string>());
      ev.payload = e.at("payload");
      if (ev.index != log.events.size()) {
        throw InputError("trace event indices have a gap at position " + std::to_string(log.events.size()));
      }
      log.events.push_back(std::move(ev));
    }
    log.final_outcome = outcome_from_json(doc.at("outcome"));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed trace document: ") + e.what());
  }
  return log;
}

namespace {

[[noreturn]] void inconsistent(const TraceEvent& e, const std::string& why) {
  throw InputError("inconsistent trace at event " + std::to_string(e.index) + " (" + std::string(to_string(e.kind)) +
                   "): " + why);
}

void expect_kind(const TraceEvent& e, std::initializer_list<EventKind> allowed) {
  if (std::find(allowed.begin(), allowed.end(), e.kind) == allowed.end()) inconsistent(e, "unexpected event kind");
}

std::int64_t field(const TraceEvent& e, const char* key) {
  auto it = e.payload.find(key);
  if (it == e.payload.end() || !it->is_number_integer()) inconsistent(e, std::string("missing integer field ") + key);
  return it->get<std::int64_t>();
}

bool closing(const TraceEvent& e) { return e.payload.value("closing", false); }

Replay replay_cover(const TraceLog& log) {
  std::vector<std::int64_t> cover;
  std::int64_t pu = -1, pv = -1;
  for (const TraceEvent& e : log.events) {
    expect_kind(e, {EventKind::EdgePicked, EventKind::VertexAddedToCover, EventKind::EdgesRemoved, EventKind::Backtrack});
    if (e.kind == EventKind::EdgePicked) {
      pu = field(e, "u");
      pv = field(e, "v");
    } else if (e.kind == EventKind::VertexAddedToCover) {
      const auto v = field(e, "vertex");
      if (log.algorithm == Algorithm::VertexCoverApprox && v != pu && v != pv) {
        inconsistent(e, "vertex is not an endpoint of the picked edge");
      }
      cover.push_back(v);
    }
  }
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  const double size = static_cast<double>(cover.size());
  return {std::move(cover), size};
}

Replay replay_preorder(const TraceLog& log) {
  Replay r;
  for (const TraceEvent& e : log.events) {
    expect_kind(e, {EventKind::MstEdgeAdded, EventKind::PreorderVisit});
    if (e.kind == EventKind::PreorderVisit) r.certificate.push_back(field(e, "vertex"));
  }
  return r;
}

// Shared by Held-Karp reconstruction and the Hamiltonian search: a path from
// vertex 0 grown by edge-picked and shrunk by backtrack.
Replay replay_path(const TraceLog& log) {
  std::vector<std::int64_t> path{0};
  bool closed = false;
  for (const TraceEvent& e : log.events) {
    if (log.algorithm == Algorithm::TspHeldKarp) {
      expect_kind(e, {EventKind::DpCellSet, EventKind::EdgePicked});
    } else {
      expect_kind(e, {EventKind::EdgePicked, EventKind::Backtrack});
    }
    if (e.kind == EventKind::DpCellSet) continue;
    if (closed) inconsistent(e, "event after the closing edge");
    if (e.kind == EventKind::EdgePicked) {
      if (field(e, "u") != path.back()) inconsistent(e, "edge does not extend the current path");
      if (closing(e)) {
        if (field(e, "v") != 0) inconsistent(e, "closing edge must return to vertex 0");
        closed = true;
      } else {
        path.push_back(field(e, "v"));
      }
    } else {
      if (path.size() < 2 || field(e, "vertex") != path.back()) inconsistent(e, "backtrack does not match the path end");
      path.pop_back();
    }
  }
  Replay r;
  if (log.algorithm == Algorithm::HamiltonianExact) {
    if (closed) {
      r.value = static_cast<double>(path.size());
      r.certificate = std::move(path);
    } else {
      if (path.size() != 1) inconsistent(log.events.back(), "search ended without closing or unwinding");
      r.value = 0.0;
    }
  } else {
    r.certificate = std::move(path);
  }
  return r;
}

Replay replay_subset_sum(const TraceLog& log) {
  Replay r;
  r.value = 0.0;
  for (const TraceEvent& e : log.events) {
    if (log.algorithm == Algorithm::SubsetSumExact) {
      expect_kind(e, {EventKind::ListMerged, EventKind::ElementDropped, EventKind::ItemTaken});
    } else {
      expect_kind(e, {EventKind::ListMerged, EventKind::ListTrimmed, EventKind::ElementDropped});
    }
    if (e.kind == EventKind::ElementDropped) r.value = static_cast<double>(field(e, "max"));
    if (e.kind == EventKind::ItemTaken) r.certificate.push_back(field(e, "element"));
  }
  std::sort(r.certificate.begin(), r.certificate.end());
  return r;
}

Replay replay_knapsack(const TraceLog& log) {
  std::vector<std::int64_t> chosen;
  std::int64_t value = 0;
  for (const TraceEvent& e : log.events) {
    expect_kind(e, {EventKind::DpCellSet, EventKind::ItemTaken, EventKind::Backtrack});
    if (e.kind == EventKind::Backtrack) {
      chosen.clear();
      value = 0;
    } else if (e.kind == EventKind::ItemTaken) {
      chosen.push_back(field(e, "index"));
      value += field(e, "value");
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return {std::move(chosen), static_cast<double>(value)};
}

}  // namespace

Replay replay_trace(const TraceLog& log) {
  if (log.truncated) throw InputError("cannot replay a truncated trace");
  for (std::size_t i = 0; i < log.events.size(); ++i) {
    if (log.events[i].index != i) throw InputError("trace event indices have a gap at position " + std::to_string(i));
  }
  switch (log.algorithm) {
    case Algorithm::VertexCoverApprox:
    case Algorithm::VertexCoverExact: return replay_cover(log);
    case Algorithm::TspApprox: return replay_preorder(log);
    case Algorithm::TspHeldKarp:
    case Algorithm::HamiltonianExact: return replay_path(log);
    case Algorithm::SubsetSumExact:
    case Algorithm::SubsetSumFptas: return replay_subset_sum(log);
    case Algorithm::KnapsackExact:
    case Algorithm::KnapsackGreedy:
    case Algorithm::KnapsackFptas: return replay_knapsack(log);
  }
  throw InputError("unknown algorithm in trace");
}

}  // namespace approx
