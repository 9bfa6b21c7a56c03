#pragma once

#include <optional>
#include <utility>

#include "approx/instance.hpp"
#include "approx/outcome.hpp"
#include "approx/trace.hpp"

namespace approx {

struct SolverLimits {
  int hamiltonian_max_vertices = 20;
  int vertex_cover_max_vertices = 25;
  int held_karp_max_vertices = 18;
  std::size_t subset_sum_max_list = 1'000'000;
  std::int64_t knapsack_max_cells = 100'000'000;
};

struct SolveOptions {
  Algorithm algorithm = Algorithm::VertexCoverApprox;
  std::optional<double> epsilon;  // required iff the algorithm is an FPTAS
  Vertex root = 0;                // TSP only
  bool force = false;             // TSP only: run on non-metric input
  SolverLimits limits;
};

// Proven bound on max(C/C*, C*/C) for the algorithm under `options`.
double proven_bound(Algorithm algorithm, std::optional<double> epsilon);

// Throws InputError when the options do not fit the algorithm (missing or
// stray epsilon) or the instance kind does not match the problem.
void check_options(const Instance& instance, const SolveOptions& options);

/// Runs the selected algorithm. With a recorder the same code path runs and
/// additionally emits step events; results are identical either way.
SolveOutcome solve(const Instance& instance, const SolveOptions& options, TraceRecorder* trace = nullptr);

std::pair<SolveOutcome, TraceLog> traced_solve(const Instance& instance, const SolveOptions& options,
                                               TraceLimits limits = {});

// The exact oracle each approximation is compared against, or nullopt for
// algorithms without a pairing (the Hamiltonian search).
std::optional<Algorithm> oracle_for(Algorithm algorithm);

}  // namespace approx
