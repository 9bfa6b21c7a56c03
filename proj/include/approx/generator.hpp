#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "approx/instance.hpp"
#include "approx/document.hpp"

namespace approx {

enum class Family { RandomGraph, PathGraph, EuclideanMetric, SubsetSum, Knapsack };

std::string_view to_string(Family family);
Family parse_family(std::string_view name);

// Recorded in report headers so a run can be reproduced on this build.
inline constexpr std::string_view kGeneratorName = "mt19937_64/splitmix64-v1";

struct GeneratorConfig {
  Family family = Family::RandomGraph;
  int n_min = 1;
  int n_max = 8;
  // random_graph
  double edge_probability = 0.5;
  bool connected = false;
  // euclidean: points uniform in [0, box]^2
  double box = 100.0;
  // subset_sum elements / knapsack values
  std::int64_t value_min = 1;
  std::int64_t value_max = 100;
  // knapsack
  std::int64_t weight_min = 1;
  std::int64_t weight_max = 100;
  // capacity = floor(capacity_ratio * total weight); t = max(1, floor(target_ratio * sum))
  double capacity_ratio = 0.5;
  double target_ratio = 0.5;
  std::uint64_t seed = 1;
  int count = 1;
};

// Throws InputError on an empty range, count < 1, or an infeasible
// combination (connectivity required with edge probability 0).
void validate(const GeneratorConfig& config);

GeneratorConfig generator_config_from_json(const Json& doc);
Json to_json(const GeneratorConfig& config);

struct GeneratedInstance {
  std::string id;
  std::uint64_t seed = 0;  // per-instance seed derived from the config seed
  Instance instance;
};

/// Deterministic for a given config. Instance i draws from its own stream
/// seeded by splitmix64(config.seed + i), so instances are independent of
/// one another and of the thread that generates them.
std::vector<GeneratedInstance> generate_instances(const GeneratorConfig& config);
GeneratedInstance generate_instance(const GeneratorConfig& config, int index);

// Points -> complete Euclidean cost matrix.
MetricInstance euclidean_metric(const std::vector<std::pair<double, double>>& points);

}  // namespace approx
