#include "approx/batch.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include <fmt/format.h>

namespace approx {

namespace {

RatioRecord evaluate(const GeneratedInstance& g, const Pairing& pairing, Algorithm oracle) {
  try {
    const SolveOutcome approx = solve(g.instance, pairing.approx);
    SolveOptions exact_options;
    exact_options.algorithm = oracle;
    exact_options.root = pairing.approx.root;
    exact_options.limits = pairing.approx.limits;
    const SolveOutcome exact = solve(g.instance, exact_options);
    return make_record(approx, exact, g.id, g.seed);
  } catch (const CapExceeded& e) {
    throw CapExceeded(g.id + ": " + e.cap_name(), e.limit(), e.requested());
  } catch (const InputError& e) {
    throw InputError(g.id + ": " + e.what());
  }
}

}  // namespace

BatchReport run_batch(const GeneratorConfig& config, const Pairing& pairing, unsigned threads) {
  const std::optional<Algorithm> oracle = pairing.oracle ? pairing.oracle : oracle_for(pairing.approx.algorithm);
  if (!oracle) throw InputError(std::string(to_string(pairing.approx.algorithm)) + " has no exact oracle to compare against");
  if (problem_of(*oracle) != problem_of(pairing.approx.algorithm)) throw InputError("oracle solves a different problem");

  BatchReport report;
  report.config = config;
  const std::vector<GeneratedInstance> instances = generate_instances(config);
  report.records.resize(instances.size());

  // Each worker writes only its own slots; the first failure wins.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
      try {
        report.records[i] = evaluate(instances[i], pairing, *oracle);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = instances.size();
      }
    }
  };
  const unsigned workers = std::clamp(threads, 1u, static_cast<unsigned>(instances.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  BatchSummary& s = report.summary;
  s.problem = problem_of(pairing.approx.algorithm);
  s.approx = pairing.approx.algorithm;
  s.oracle = *oracle;
  s.bound = proven_bound(pairing.approx.algorithm, pairing.approx.epsilon);
  s.count = report.records.size();
  double total = 0.0;
  s.max_ratio = 0.0;
  for (const RatioRecord& r : report.records) {
    total += r.ratio;
    s.max_ratio = std::max(s.max_ratio, r.ratio);
    if (!r.within_bound) ++s.violations;
  }
  s.mean_ratio = total / static_cast<double>(s.count);
  return report;
}

std::string to_csv(const BatchReport& report) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const RatioRecord& r : report.records) {
    out += fmt::format("{},{},{},{},{},{},{},{}\n", to_string(r.problem), r.instance_id, r.seed,
                       format_fixed(r.approx_value), format_fixed(r.exact_value), format_fixed(r.ratio),
                       format_fixed(r.bound), r.within_bound ? "true" : "false");
  }
  return out;
}

Json summary_to_json(const BatchReport& report) {
  const BatchSummary& s = report.summary;
  auto six = [](double v) { return std::round(v * 1e6) / 1e6; };
  Json doc;
  doc["kind"] = "batch_summary";
  doc["generator"] = std::string(kGeneratorName);
  doc["config"] = to_json(report.config);
  doc["problem"] = std::string(to_string(s.problem));
  doc["algorithm"] = std::string(to_string(s.approx));
  doc["oracle"] = std::string(to_string(s.oracle));
  doc["count"] = s.count;
  doc["mean_ratio"] = six(s.mean_ratio);
  doc["max_ratio"] = six(s.max_ratio);
  doc["bound"] = s.bound;
  doc["violations"] = s.violations;
  return doc;
}

}  // namespace approx
