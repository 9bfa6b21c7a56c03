#include "approx/generator.hpp"

#include <cmath>
#include <random>
#include <set>

#include <fmt/format.h>

namespace approx {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::RandomGraph: return "random_graph";
    case Family::PathGraph: return "path_graph";
    case Family::EuclideanMetric: return "euclidean";
    case Family::SubsetSum: return "subset_sum";
    case Family::Knapsack: return "knapsack";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::RandomGraph, Family::PathGraph, Family::EuclideanMetric, Family::SubsetSum, Family::Knapsack}) {
    if (to_string(f) == name) return f;
  }
  throw InputError("unknown generator family \"" + std::string(name) +
                   "\"; valid: random_graph, path_graph, euclidean, subset_sum, knapsack");
}

void validate(const GeneratorConfig& c) {
  if (c.count < 1) throw InputError("count must be >= 1");
  if (c.n_min < 0 || c.n_min > c.n_max) throw InputError("n range is empty");
  if ((c.family == Family::EuclideanMetric || c.family == Family::PathGraph) && c.n_min < 1) {
    throw InputError("this family needs n_min >= 1");
  }
  if (!(c.edge_probability >= 0.0 && c.edge_probability <= 1.0)) throw InputError("edge_probability must lie in [0, 1]");
  if (!(c.box > 0.0) || !std::isfinite(c.box)) throw InputError("box must be positive");
  if (c.value_min < 1 || c.value_min > c.value_max) throw InputError("value range is empty");
  if (c.weight_min < 1 || c.weight_min > c.weight_max) throw InputError("weight range is empty");
  if (!(c.capacity_ratio >= 0.0) || !(c.target_ratio >= 0.0)) throw InputError("ratios must be nonnegative");
  if (c.family == Family::RandomGraph && c.connected && c.edge_probability == 0.0 && c.n_max > 1) {
    throw InputError("infeasible config: connectivity required with edge_probability 0");
  }
}

GeneratorConfig generator_config_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("generator config must be an object");
  GeneratorConfig c;
  try {
    c.family = parse_family(doc.at("family").get<std::string>());
    c.n_min = doc.value("n_min", c.n_min);
    c.n_max = doc.value("n_max", c.n_max);
    c.edge_probability = doc.value("edge_probability", c.edge_probability);
    c.connected = doc.value("connected", c.connected);
    c.box = doc.value("box", c.box);
    c.value_min = doc.value("value_min", c.value_min);
    c.value_max = doc.value("value_max", c.value_max);
    c.weight_min = doc.value("weight_min", c.weight_min);
    c.weight_max = doc.value("weight_max", c.weight_max);
    c.capacity_ratio = doc.value("capacity_ratio", c.capacity_ratio);
    c.target_ratio = doc.value("target_ratio", c.target_ratio);
    c.seed = doc.value("seed", c.seed);
    c.count = doc.value("count", c.count);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed generator config: ") + e.what());
  }
  validate(c);
  return c;
}

Json to_json(const GeneratorConfig& c) {
  return Json{{"family", std::string(to_string(c.family))},
              {"n_min", c.n_min},
              {"n_max", c.n_max},
              {"edge_probability", c.edge_probability},
              {"connected", c.connected},
              {"box", c.box},
              {"value_min", c.value_min},
              {"value_max", c.value_max},
              {"weight_min", c.weight_min},
              {"weight_max", c.weight_max},
              {"capacity_ratio", c.capacity_ratio},
              {"target_ratio", c.target_ratio},
              {"seed", c.seed},
              {"count", c.count}};
}

MetricInstance euclidean_metric(const std::vector<std::pair<double, double>>& points) {
  const std::size_t n = points.size();
  std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::hypot(points[i].first - points[j].first, points[i].second - points[j].second);
      cost[i][j] = cost[j][i] = d;
    }
  }
  return MetricInstance(std::move(cost));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Library distributions differ between standard libraries; these do not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

WeightedGraph random_graph(const GeneratorConfig& c, int n, Rng& rng) {
  std::set<std::pair<Vertex, Vertex>> pairs;
  if (c.connected && n > 1) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
    for (std::size_t i = perm.size() - 1; i > 0; --i) {
      std::swap(perm[i], perm[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i)))]);
    }
    for (std::size_t k = 1; k < perm.size(); ++k) {
      const Vertex a = perm[k];
      const Vertex b = perm[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(k) - 1))];
      pairs.insert({std::min(a, b), std::max(a, b)});
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(c.edge_probability)) pairs.insert({u, v});
    }
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : pairs) edges.push_back({u, v, static_cast<double>(rng.uniform_int(1, 10))});
  return WeightedGraph(n, std::move(edges));
}

}  // namespace

GeneratedInstance generate_instance(const GeneratorConfig& c, int index) {
  validate(c);
  GeneratedInstance out;
  out.seed = splitmix64(c.seed + static_cast<std::uint64_t>(index));
  out.id = fmt::format("{}-{:05d}", to_string(c.family), index);
  Rng rng(out.seed);
  const int n = static_cast<int>(rng.uniform_int(c.n_min, c.n_max));

  switch (c.family) {
    case Family::RandomGraph: out.instance = random_graph(c, n, rng); break;
    case Family::PathGraph: {
      std::vector<Edge> edges;
      for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1.0});
      out.instance = WeightedGraph(n, std::move(edges));
      break;
    }
    case Family::EuclideanMetric: {
      std::vector<std::pair<double, double>> points;
      for (int i = 0; i < n; ++i) points.emplace_back(rng.uniform01() * c.box, rng.uniform01() * c.box);
      out.instance = euclidean_metric(points);
      break;
    }
    case Family::SubsetSum: {
      std::vector<std::int64_t> set;
      std::int64_t sum = 0;
      for (int i = 0; i < n; ++i) {
        set.push_back(rng.uniform_int(c.value_min, c.value_max));
        sum += set.back();
      }
      const auto t = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(c.target_ratio * static_cast<double>(sum))));
      out.instance = SubsetSumInstance(std::move(set), t);
      break;
    }
    case Family::Knapsack: {
      std::vector<Item> items;
      std::int64_t total_weight = 0;
      for (int i = 0; i < n; ++i) {
        const auto v = rng.uniform_int(c.value_min, c.value_max);
        const auto w = rng.uniform_int(c.weight_min, c.weight_max);
        items.push_back({v, w});
        total_weight += w;
      }
      const auto cap = static_cast<std::int64_t>(std::floor(c.capacity_ratio * static_cast<double>(total_weight)));
      out.instance = KnapsackInstance(std::move(items), cap);
      break;
    }
  }
  return out;
}

std::vector<GeneratedInstance> generate_instances(const GeneratorConfig& config) {
  validate(config);
  std::vector<GeneratedInstance> out;
  out.reserve(static_cast<std::size_t>(config.count));
  for (int i = 0; i < config.count; ++i) out.push_back(generate_instance(config, i));
  return out;
}

}  // namespace approx
