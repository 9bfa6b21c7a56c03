#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "approx/error.hpp"

namespace approx {

using Vertex = int;

// Undirected edge, stored with u < v once it belongs to a WeightedGraph.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double w = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Raised by the validating constructors. `field` names the offending part of
// the document ("edges[2]", "set[0]", "cost[1][0]", ...).
class ValidationError : public InputError {
 public:
  ValidationError(std::string field, const std::string& what);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Undirected graph on vertices 0..n-1 with nonnegative edge costs.
///
/// The constructor validates every invariant (ids in range, no self-loops,
/// no duplicate unordered pairs, finite nonnegative costs) and canonicalizes
/// the edge list: each edge is stored with u < v and the list is sorted by
/// (u, v). Everything downstream relies on that order for tie-breaking.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(int n, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Incident edge indices per vertex, ascending.
  std::span<const std::size_t> incident(Vertex v) const { return incident_[static_cast<std::size_t>(v)]; }
  bool has_edge(Vertex a, Vertex b) const;
  // Cost of edge {a,b}; throws InputError if absent.
  double weight(Vertex a, Vertex b) const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Complete symmetric cost matrix with zero diagonal.
class MetricInstance {
 public:
  MetricInstance() = default;
  explicit MetricInstance(std::vector<std::vector<double>> cost);

  int n() const noexcept { return n_; }
  double cost(Vertex u, Vertex v) const {
    return cost_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
  }
  std::vector<std::vector<double>> matrix() const;

  friend bool operator==(const MetricInstance&, const MetricInstance&) = default;

 private:
  int n_ = 0;
  std::vector<double> cost_;
};

/// Multiset of positive integers and a positive target. The set is kept in
/// ascending order, which is also its canonical serialization order.
class SubsetSumInstance {
 public:
  SubsetSumInstance() = default;
  SubsetSumInstance(std::vector<std::int64_t> set, std::int64_t target);

  std::span<const std::int64_t> set() const noexcept { return set_; }
  std::int64_t target() const noexcept { return target_; }
  std::size_t size() const noexcept { return set_.size(); }

  friend bool operator==(const SubsetSumInstance&, const SubsetSumInstance&) = default;

 private:
  std::vector<std::int64_t> set_;
  std::int64_t target_ = 1;
};

struct Item {
  std::int64_t value = 1;
  std::int64_t weight = 1;

  friend bool operator==(const Item&, const Item&) = default;
};

/// 0/1 knapsack. Item order is significant (certificates are item indices).
class KnapsackInstance {
 public:
  KnapsackInstance() = default;
  KnapsackInstance(std::vector<Item> items, std::int64_t capacity);

  std::span<const Item> items() const noexcept { return items_; }
  std::int64_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept { return items_.size(); }

  friend bool operator==(const KnapsackInstance&, const KnapsackInstance&) = default;

 private:
  std::vector<Item> items_;
  std::int64_t capacity_ = 0;
};

using Instance = std::variant<WeightedGraph, MetricInstance, SubsetSumInstance, KnapsackInstance>;

enum class InstanceKind { Graph, Metric, SubsetSum, Knapsack };

InstanceKind kind_of(const Instance& instance);
std::string_view to_string(InstanceKind kind);

// Parses an instance document and validates it. Throws InputError on
// malformed syntax or an unknown kind, ValidationError on invariant failure.
Instance read_instance(std::string_view text);
Instance read_instance_file(const std::string& path);

// Canonical compact text: fixed key order, sorted edges / set.
std::string write_instance(const Instance& instance);

// 64-bit FNV-1a over the canonical text, as 16 hex digits.
std::string instance_digest(const Instance& instance);

}  // namespace approx
