#include "approx/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "approx/document.hpp"

namespace approx {

ValidationError::ValidationError(std::string field, const std::string& what)
    : InputError(field + ": " + what), field_(std::move(field)) {}

namespace {

std::string indexed(std::string_view name, std::size_t i) {
  return std::string(name) + "[" + std::to_string(i) + "]";
}

}  // namespace

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw ValidationError("n", "vertex count must be nonnegative");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge& e = edges[i];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw ValidationError(indexed("edges", i), "vertex id out of range for n=" + std::to_string(n));
    }
    if (e.u == e.v) throw ValidationError(indexed("edges", i), "self-loop on vertex " + std::to_string(e.u));
    if (!std::isfinite(e.w) || e.w < 0.0) throw ValidationError(indexed("edges", i), "edge cost must be finite and nonnegative");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw ValidationError("edges", "duplicate edge {" + std::to_string(edges[i].u) + "," +
                                         std::to_string(edges[i].v) + "}");
    }
  }
  edges_ = std::move(edges);
  incident_.assign(static_cast<std::size_t>(n), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    incident_[static_cast<std::size_t>(edges_[i].u)].push_back(i);
    incident_[static_cast<std::size_t>(edges_[i].v)].push_back(i);
  }
}

bool WeightedGraph::has_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{a, b},
                             [](const Edge& e, const std::pair<Vertex, Vertex>& key) {
                               return std::tie(e.u, e.v) < std::tie(key.first, key.second);
                             });
  return it != edges_.end() && it->u == a && it->v == b;
}

double WeightedGraph::weight(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{a, b},
                             [](const Edge& e, const std::pair<Vertex, Vertex>& key) {
                               return std::tie(e.u, e.v) < std::tie(key.first, key.second);
                             });
  if (it == edges_.end() || it->u != a || it->v != b) {
    throw InputError("no edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  }
  return it->w;
}

MetricInstance::MetricInstance(std::vector<std::vector<double>> cost) {
  const std::size_t n = cost.size();
  if (n == 0) throw ValidationError("cost", "metric needs at least one vertex");
  for (std::size_t i = 0; i < n; ++i) {
    if (cost[i].size() != n) throw ValidationError(indexed("cost", i), "row length differs from n");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double c = cost[i][j];
      const std::string field = indexed("cost", i) + "[" + std::to_string(j) + "]";
      if (!std::isfinite(c) || c < 0.0) throw ValidationError(field, "cost must be finite and nonnegative");
      if (i == j && c != 0.0) throw ValidationError(field, "diagonal must be zero");
      if (c != cost[j][i]) throw ValidationError(field, "asymmetric matrix");
    }
  }
  n_ = static_cast<int>(n);
  cost_.reserve(n * n);
  for (const auto& row : cost) cost_.insert(cost_.end(), row.begin(), row.end());
}

std::vector<std::vector<double>> MetricInstance::matrix() const {
  std::vector<std::vector<double>> m(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    m[static_cast<std::size_t>(i)].assign(cost_.begin() + i * n_, cost_.begin() + (i + 1) * n_);
  }
  return m;
}

SubsetSumInstance::SubsetSumInstance(std::vector<std::int64_t> set, std::int64_t target) : target_(target) {
  if (target < 1) throw ValidationError("t", "target must be a positive integer");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] < 1) throw ValidationError(indexed("set", i), "elements must be positive integers");
    if (set[i] > std::numeric_limits<std::int64_t>::max() - total) {
      throw ValidationError("set", "sum of elements exceeds the 63-bit range");
    }
    total += set[i];
  }
  std::sort(set.begin(), set.end());
  set_ = std::move(set);
}

KnapsackInstance::KnapsackInstance(std::vector<Item> items, std::int64_t capacity)
    : items_(std::move(items)), capacity_(capacity) {
  if (capacity < 0) throw ValidationError("capacity", "capacity must be nonnegative");
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i].value < 1) throw ValidationError(indexed("items", i), "value must be a positive integer");
    if (items_[i].weight < 1) throw ValidationError(indexed("items", i), "weight must be a positive integer");
  }
}

InstanceKind kind_of(const Instance& instance) { return static_cast<InstanceKind>(instance.index()); }

std::string_view to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::Graph: return "graph";
    case InstanceKind::Metric: return "metric";
    case InstanceKind::SubsetSum: return "subset_sum";
    case InstanceKind::Knapsack: return "knapsack";
  }
  return "unknown";
}

namespace {

const Json& require(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t as_integer(const Json& value, const std::string& field) {
  if (!value.is_number_integer()) throw InputError(field + ": expected an integer");
  if (value.is_number_unsigned() && value.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw InputError(field + ": integer out of range");
  }
  return value.get<std::int64_t>();
}

int as_vertex_count(const Json& value, const std::string& field) {
  const std::int64_t n = as_integer(value, field);
  if (n < 0 || n > std::numeric_limits<int>::max()) throw ValidationError(field, "vertex count out of range");
  return static_cast<int>(n);
}

double as_number(const Json& value, const std::string& field) {
  if (!value.is_number()) throw InputError(field + ": expected a number");
  return value.get<double>();
}

const Json& as_array(const Json& value, const std::string& field) {
  if (!value.is_array()) throw InputError(field + ": expected an array");
  return value;
}

Instance parse_graph(const Json& doc) {
  const int n = as_vertex_count(require(doc, "n"), "n");
  const Json& raw = as_array(require(doc, "edges"), "edges");
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::string field = indexed("edges", i);
    const Json& e = as_array(raw[i], field);
    if (e.size() != 3) throw InputError(field + ": expected [u,v,w]");
    const std::int64_t u = as_integer(e[0], field);
    const std::int64_t v = as_integer(e[1], field);
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ValidationError(field, "vertex id out of range for n=" + std::to_string(n));
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), as_number(e[2], field)});
  }
  return WeightedGraph(n, std::move(edges));
}

Instance parse_metric(const Json& doc) {
  const int n = as_vertex_count(require(doc, "n"), "n");
  const Json& raw = as_array(require(doc, "cost"), "cost");
  if (raw.size() != static_cast<std::size_t>(n)) throw ValidationError("cost", "matrix has " + std::to_string(raw.size()) + " rows, expected n");
  std::vector<std::vector<double>> cost(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Json& row = as_array(raw[i], indexed("cost", i));
    for (std::size_t j = 0; j < row.size(); ++j) {
      cost[i].push_back(as_number(row[j], indexed("cost", i) + "[" + std::to_string(j) + "]"));
    }
  }
  return MetricInstance(std::move(cost));
}

Instance parse_subset_sum(const Json& doc) {
  const Json& raw = as_array(require(doc, "set"), "set");
  std::vector<std::int64_t> set;
  set.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) set.push_back(as_integer(raw[i], indexed("set", i)));
  return SubsetSumInstance(std::move(set), as_integer(require(doc, "t"), "t"));
}

Instance parse_knapsack(const Json& doc) {
  const Json& raw = as_array(require(doc, "items"), "items");
  std::vector<Item> items;
  items.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::string field = indexed("items", i);
    const Json& it = as_array(raw[i], field);
    if (it.size() != 2) throw InputError(field + ": expected [value,weight]");
    items.push_back({as_integer(it[0], field), as_integer(it[1], field)});
  }
  return KnapsackInstance(std::move(items), as_integer(require(doc, "capacity"), "capacity"));
}

}  // namespace

Instance read_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed instance document: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("instance document must be an object");
  const Json& kind = require(doc, "kind");
  if (!kind.is_string()) throw InputError("kind: expected a string");
  const std::string name = kind.get<std::string>();
  if (name == "graph") return parse_graph(doc);
  if (name == "metric") return parse_metric(doc);
  if (name == "subset_sum") return parse_subset_sum(doc);
  if (name == "knapsack") return parse_knapsack(doc);
  throw InputError("unknown problem kind \"" + name + "\"");
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read instance file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_instance(buffer.str());
}

std::string write_instance(const Instance& instance) {
  Json doc;
  doc["kind"] = std::string(to_string(kind_of(instance)));
  std::visit(
      [&doc](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, WeightedGraph>) {
          doc["n"] = inst.n();
          Json edges = Json::array();
          for (const Edge& e : inst.edges()) edges.push_back(Json::array({e.u, e.v, e.w}));
          doc["edges"] = std::move(edges);
        } else if constexpr (std::is_same_v<T, MetricInstance>) {
          doc["n"] = inst.n();
          doc["cost"] = inst.matrix();
        } else if constexpr (std::is_same_v<T, SubsetSumInstance>) {
          doc["set"] = Json(std::vector<std::int64_t>(inst.set().begin(), inst.set().end()));
          doc["t"] = inst.target();
        } else {
          Json items = Json::array();
          for (const Item& it : inst.items()) items.push_back(Json::array({it.value, it.weight}));
          doc["items"] = std::move(items);
          doc["capacity"] = inst.capacity();
        }
      },
      instance);
  return doc.dump();
}

std::string instance_digest(const Instance& instance) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : write_instance(instance)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace approx
