#include "approx/ratio.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace approx {

double approximation_ratio(double approx_value, double exact_value) {
  if (approx_value < 0.0 || exact_value < 0.0) throw InputError("objective values must be nonnegative");
  if (approx_value == 0.0 && exact_value == 0.0) return 1.0;
  if (approx_value == 0.0 || exact_value == 0.0) {
    throw InputError("approximation ratio undefined: exactly one of the values is zero");
  }
  return std::max(approx_value / exact_value, exact_value / approx_value);
}

RatioRecord make_record(const SolveOutcome& approx, const SolveOutcome& exact, std::string instance_id,
                        std::uint64_t seed) {
  RatioRecord r;
  r.problem = approx.problem;
  r.instance_id = std::move(instance_id);
  r.seed = seed;
  r.approx_value = approx.value;
  r.exact_value = exact.value;
  r.ratio = approximation_ratio(approx.value, exact.value);
  r.bound = approx.bound;
  r.within_bound = r.ratio <= r.bound + kBoundTolerance;
  return r;
}

std::string format_fixed(double value) { return fmt::format("{:.6f}", value); }

Json to_json(const RatioRecord& r) {
  Json doc;
  doc["problem"] = std::string(to_string(r.problem));
  doc["instance_id"] = r.instance_id;
  doc["seed"] = r.seed;
  doc["approx"] = r.approx_value;
  doc["exact"] = r.exact_value;
  doc["ratio"] = std::round(r.ratio * 1e6) / 1e6;
  doc["bound"] = r.bound;
  doc["within_bound"] = r.within_bound;
  return doc;
}

}  // namespace approx
