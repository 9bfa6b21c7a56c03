#pragma once

#include <optional>
#include <string>
#include <vector>

#include "approx/generator.hpp"
#include "approx/ratio.hpp"
#include "approx/solve.hpp"

namespace approx {

// Approximation plus its exact oracle. The oracle defaults to oracle_for().
struct Pairing {
  SolveOptions approx;
  std::optional<Algorithm> oracle;
};

struct BatchSummary {
  Problem problem = Problem::VertexCover;
  Algorithm approx = Algorithm::VertexCoverApprox;
  Algorithm oracle = Algorithm::VertexCoverExact;
  std::size_t count = 0;
  double mean_ratio = 1.0;
  double max_ratio = 1.0;
  std::size_t violations = 0;
  double bound = 1.0;

  friend bool operator==(const BatchSummary&, const BatchSummary&) = default;
};

struct BatchReport {
  GeneratorConfig config;
  std::vector<RatioRecord> records;  // ordered by instance id
  BatchSummary summary;
};

/// One record per generated instance, solved on up to `threads` workers.
/// Solver errors are rethrown with the instance id prefixed; CapExceeded
/// keeps its type.
BatchReport run_batch(const GeneratorConfig& config, const Pairing& pairing, unsigned threads = 1);

inline constexpr std::string_view kCsvHeader = "problem,instance_id,seed,approx,exact,ratio,bound,within_bound";

std::string to_csv(const BatchReport& report);
Json summary_to_json(const BatchReport& report);

}  // namespace approx
