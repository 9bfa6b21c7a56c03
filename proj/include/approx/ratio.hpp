#pragma once

#include <cstdint>
#include <string>

#include "approx/document.hpp"
#include "approx/outcome.hpp"

namespace approx {

inline constexpr double kBoundTolerance = 1e-9;

/// max(C/C*, C*/C), covering minimization and maximization alike. Both zero
/// gives 1; exactly one zero throws InputError (the ratio is unbounded).
double approximation_ratio(double approx_value, double exact_value);

struct RatioRecord {
  Problem problem = Problem::VertexCover;
  std::string instance_id;
  std::uint64_t seed = 0;
  double approx_value = 0.0;
  double exact_value = 0.0;
  double ratio = 1.0;
  double bound = 1.0;
  bool within_bound = true;

  friend bool operator==(const RatioRecord&, const RatioRecord&) = default;
};

RatioRecord make_record(const SolveOutcome& approx, const SolveOutcome& exact, std::string instance_id,
                        std::uint64_t seed);

Json to_json(const RatioRecord& record);

// Fixed-point with six decimals, the precision every report uses.
std::string format_fixed(double value);

}  // namespace approx
