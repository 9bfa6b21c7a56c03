#include "approx/solve.hpp"

#include <string>

#include "approx/graph_algos.hpp"
#include "approx/knapsack.hpp"
#include "approx/subset_sum.hpp"
#include "approx/tsp.hpp"
#include "approx/vertex_cover.hpp"

namespace approx {

double proven_bound(Algorithm algorithm, std::optional<double> epsilon) {
  switch (algorithm) {
    case Algorithm::VertexCoverApprox:
    case Algorithm::TspApprox:
    case Algorithm::KnapsackGreedy: return 2.0;
    case Algorithm::SubsetSumFptas: return 1.0 + epsilon.value_or(0.0);
    // (1 - eps) OPT <= value, i.e. OPT / value <= 1 / (1 - eps).
    case Algorithm::KnapsackFptas: return 1.0 / (1.0 - epsilon.value_or(0.0));
    default: return 1.0;
  }
}

void check_options(const Instance& instance, const SolveOptions& options) {
  const Problem problem = problem_of(options.algorithm);
  const InstanceKind want = instance_kind_for(problem);
  if (kind_of(instance) != want) {
    throw InputError(std::string(to_string(options.algorithm)) + " needs a " + std::string(to_string(want)) +
                     " instance, got " + std::string(to_string(kind_of(instance))));
  }
  if (is_fptas(options.algorithm)) {
    if (!options.epsilon) throw InputError(std::string(to_string(options.algorithm)) + " requires --epsilon");
    if (!(*options.epsilon > 0.0 && *options.epsilon < 1.0)) throw InputError("epsilon must satisfy 0 < epsilon < 1");
  } else if (options.epsilon) {
    throw InputError("--epsilon only applies to FPTAS algorithms");
  }
}

namespace {

std::vector<std::int64_t> widen(const std::vector<Vertex>& v) { return {v.begin(), v.end()}; }

std::vector<std::int64_t> widen(const std::vector<std::size_t>& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(static_cast<std::int64_t>(x));
  return out;
}

}  // namespace

SolveOutcome solve(const Instance& instance, const SolveOptions& options, TraceRecorder* trace) {
  check_options(instance, options);
  const SolverLimits& lim = options.limits;

  SolveOutcome out;
  out.algorithm = options.algorithm;
  out.problem = problem_of(options.algorithm);
  out.is_exact = is_exact(options.algorithm);
  out.bound = proven_bound(options.algorithm, options.epsilon);
  out.epsilon = options.epsilon;

  switch (options.algorithm) {
    case Algorithm::VertexCoverApprox:
    case Algorithm::VertexCoverExact: {
      const auto& g = std::get<WeightedGraph>(instance);
      const VertexCoverSolution s = options.algorithm == Algorithm::VertexCoverApprox
                                        ? approx_vertex_cover(g, trace)
                                        : exact_vertex_cover(g, lim.vertex_cover_max_vertices, trace);
      out.value = static_cast<double>(s.size());
      out.certificate = widen(s.cover);
      break;
    }
    case Algorithm::TspApprox: {
      const auto& m = std::get<MetricInstance>(instance);
      bool metric_ok = true;
      if (options.force) metric_ok = !check_triangle_inequality(m).has_value();
      const Tour tour = approx_tsp_tour(m, TspOptions{options.root, options.force}, trace);
      out.value = tour.cost;
      out.certificate = widen(tour.order);
      out.guarantee = metric_ok;
      break;
    }
    case Algorithm::TspHeldKarp: {
      const Tour tour = held_karp(std::get<MetricInstance>(instance), lim.held_karp_max_vertices, trace);
      out.value = tour.cost;
      out.certificate = widen(tour.order);
      break;
    }
    case Algorithm::SubsetSumExact: {
      const auto r = exact_subset_sum(std::get<SubsetSumInstance>(instance), lim.subset_sum_max_list, trace);
      out.value = static_cast<double>(r.value);
      out.certificate = r.subset;
      break;
    }
    case Algorithm::SubsetSumFptas: {
      const auto r = approx_subset_sum(std::get<SubsetSumInstance>(instance), *options.epsilon, trace);
      out.value = static_cast<double>(r.value);
      break;
    }
    case Algorithm::KnapsackExact:
    case Algorithm::KnapsackGreedy:
    case Algorithm::KnapsackFptas: {
      const auto& k = std::get<KnapsackInstance>(instance);
      KnapsackSolution s;
      if (options.algorithm == Algorithm::KnapsackExact) {
        s = knapsack_exact(k, lim.knapsack_max_cells, trace);
      } else if (options.algorithm == Algorithm::KnapsackGreedy) {
        s = knapsack_greedy(k, trace);
      } else {
        s = knapsack_fptas(k, *options.epsilon, lim.knapsack_max_cells, trace);
      }
      out.value = static_cast<double>(s.total_value);
      out.certificate = widen(s.chosen);
      break;
    }
    case Algorithm::HamiltonianExact: {
      const auto cycle = find_hamiltonian_cycle(std::get<WeightedGraph>(instance), lim.hamiltonian_max_vertices, trace);
      if (cycle) {
        out.value = static_cast<double>(cycle->size());
        out.certificate = widen(*cycle);
      }
      break;
    }
  }
  return out;
}

std::pair<SolveOutcome, TraceLog> traced_solve(const Instance& instance, const SolveOptions& options,
                                               TraceLimits limits) {
  TraceRecorder recorder(limits);
  SolveOutcome outcome = solve(instance, options, &recorder);
  TraceLog log;
  log.problem = outcome.problem;
  log.algorithm = outcome.algorithm;
  log.digest = instance_digest(instance);
  log.truncated = recorder.truncated();
  log.events = recorder.take_events();
  log.final_outcome = outcome;
  return {std::move(outcome), std::move(log)};
}

std::optional<Algorithm> oracle_for(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::VertexCoverApprox:
    case Algorithm::VertexCoverExact: return Algorithm::VertexCoverExact;
    case Algorithm::TspApprox:
    case Algorithm::TspHeldKarp: return Algorithm::TspHeldKarp;
    case Algorithm::SubsetSumExact:
    case Algorithm::SubsetSumFptas: return Algorithm::SubsetSumExact;
    case Algorithm::KnapsackExact:
    case Algorithm::KnapsackGreedy:
    case Algorithm::KnapsackFptas: return Algorithm::KnapsackExact;
    case Algorithm::HamiltonianExact: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace approx
