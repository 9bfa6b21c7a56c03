#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "approx/instance.hpp"
#include "approx/document.hpp"

namespace approx {

enum class Problem { VertexCover, Tsp, SubsetSum, Knapsack, Hamiltonian };

// Stable kebab-case names are what traces, the CLI and the HTTP API key on.
enum class Algorithm {
  VertexCoverApprox,
  VertexCoverExact,
  TspApprox,
  TspHeldKarp,
  SubsetSumExact,
  SubsetSumFptas,
  KnapsackExact,
  KnapsackGreedy,
  KnapsackFptas,
  HamiltonianExact,
};

inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::VertexCoverApprox, Algorithm::VertexCoverExact, Algorithm::TspApprox,
    Algorithm::TspHeldKarp,       Algorithm::SubsetSumExact,   Algorithm::SubsetSumFptas,
    Algorithm::KnapsackExact,     Algorithm::KnapsackGreedy,   Algorithm::KnapsackFptas,
    Algorithm::HamiltonianExact,
};

inline constexpr Problem kAllProblems[] = {Problem::VertexCover, Problem::Tsp, Problem::SubsetSum,
                                           Problem::Knapsack, Problem::Hamiltonian};

std::string_view to_string(Problem p);
std::string_view to_string(Algorithm a);
Problem parse_problem(std::string_view name);
// Throws InputError listing the valid names.
Algorithm parse_algorithm(std::string_view name);

Problem problem_of(Algorithm a);
InstanceKind instance_kind_for(Problem p);
bool is_exact(Algorithm a);
bool is_fptas(Algorithm a);
// Minimization problems compare approx >= exact; maximization the reverse.
bool is_minimization(Problem p);

/// Result of running any algorithm on any instance.
///
/// `certificate` holds the witness as integers:
///   vertex-cover  sorted cover vertex ids
///   tsp           tour order starting at the root
///   subset-sum    chosen elements, ascending (empty for the FPTAS, which
///                 reports only its value)
///   knapsack      chosen item indices, ascending
///   hamiltonian   cycle order from vertex 0, or empty when none exists
struct SolveOutcome {
  Problem problem = Problem::VertexCover;
  Algorithm algorithm = Algorithm::VertexCoverApprox;
  double value = 0.0;
  std::vector<std::int64_t> certificate;
  bool is_exact = false;
  // Proven bound on max(C/C*, C*/C); 1 for exact algorithms.
  double bound = 1.0;
  // False only when a precondition of the bound was overridden (--force).
  bool guarantee = true;
  std::optional<double> epsilon;

  friend bool operator==(const SolveOutcome&, const SolveOutcome&) = default;
};

Json to_json(const SolveOutcome& outcome);
SolveOutcome outcome_from_json(const Json& doc);

// Recomputes the objective from the certificate and checks feasibility.
// Throws InputError if the certificate is not a feasible witness.
double evaluate_certificate(const Instance& instance, const SolveOutcome& outcome);

}  // namespace approx
