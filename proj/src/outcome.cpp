#include "approx/outcome.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "approx/knapsack.hpp"
#include "approx/tsp.hpp"
#include "approx/vertex_cover.hpp"

namespace approx {

std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::VertexCover: return "vertex-cover";
    case Problem::Tsp: return "tsp";
    case Problem::SubsetSum: return "subset-sum";
    case Problem::Knapsack: return "knapsack";
    case Problem::Hamiltonian: return "hamiltonian-cycle";
  }
  return "unknown";
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::VertexCoverApprox: return "vertex-cover-approx";
    case Algorithm::VertexCoverExact: return "vertex-cover-exact";
    case Algorithm::TspApprox: return "tsp-approx";
    case Algorithm::TspHeldKarp: return "tsp-held-karp";
    case Algorithm::SubsetSumExact: return "subset-sum-exact";
    case Algorithm::SubsetSumFptas: return "subset-sum-fptas";
    case Algorithm::KnapsackExact: return "knapsack-exact";
    case Algorithm::KnapsackGreedy: return "knapsack-greedy";
    case Algorithm::KnapsackFptas: return "knapsack-fptas";
    case Algorithm::HamiltonianExact: return "hamiltonian-exact";
  }
  return "unknown";
}

Problem parse_problem(std::string_view name) {
  for (Problem p : kAllProblems) {
    if (to_string(p) == name) return p;
  }
  throw InputError("unknown problem \"" + std::string(name) + "\"");
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (to_string(a) == name) return a;
  }
  std::string valid;
  for (Algorithm a : kAllAlgorithms) {
    if (!valid.empty()) valid += ", ";
    valid += to_string(a);
  }
  throw InputError("unknown algorithm \"" + std::string(name) + "\"; valid names: " + valid);
}

Problem problem_of(Algorithm a) {
  switch (a) {
    case Algorithm::VertexCoverApprox:
    case Algorithm::VertexCoverExact: return Problem::VertexCover;
    case Algorithm::TspApprox:
    case Algorithm::TspHeldKarp: return Problem::Tsp;
    case Algorithm::SubsetSumExact:
    case Algorithm::SubsetSumFptas: return Problem::SubsetSum;
    case Algorithm::KnapsackExact:
    case Algorithm::KnapsackGreedy:
    case Algorithm::KnapsackFptas: return Problem::Knapsack;
    case Algorithm::HamiltonianExact: return Problem::Hamiltonian;
  }
  return Problem::VertexCover;
}

InstanceKind instance_kind_for(Problem p) {
  switch (p) {
    case Problem::VertexCover:
    case Problem::Hamiltonian: return InstanceKind::Graph;
    case Problem::Tsp: return InstanceKind::Metric;
    case Problem::SubsetSum: return InstanceKind::SubsetSum;
    case Problem::Knapsack: return InstanceKind::Knapsack;
  }
  return InstanceKind::Graph;
}

bool is_exact(Algorithm a) {
  switch (a) {
    case Algorithm::VertexCoverExact:
    case Algorithm::TspHeldKarp:
    case Algorithm::SubsetSumExact:
    case Algorithm::KnapsackExact:
    case Algorithm::HamiltonianExact: return true;
    default: return false;
  }
}

bool is_fptas(Algorithm a) { return a == Algorithm::SubsetSumFptas || a == Algorithm::KnapsackFptas; }

bool is_minimization(Problem p) { return p == Problem::VertexCover || p == Problem::Tsp; }

namespace {

// Integral values print without a fractional part so integer problems read
// naturally; TSP costs keep full precision.
Json number(double v) {
  if (std::isfinite(v) && std::floor(v) == v && std::fabs(v) < 9.0e15) return static_cast<std::int64_t>(v);
  return v;
}

}  // namespace

Json to_json(const SolveOutcome& o) {
  Json doc;
  doc["problem"] = std::string(to_string(o.problem));
  doc["algorithm"] = std::string(to_string(o.algorithm));
  doc["value"] = number(o.value);
  doc["certificate"] = o.certificate;
  doc["is_exact"] = o.is_exact;
  doc["bound"] = number(o.bound);
  doc["guarantee"] = o.guarantee;
  if (o.epsilon) doc["epsilon"] = *o.epsilon;
  return doc;
}

SolveOutcome outcome_from_json(const Json& doc) {
  try {
    SolveOutcome o;
    o.problem = parse_problem(doc.at("problem").get<std::string>());
    o.algorithm = parse_algorithm(doc.at("algorithm").get<std::string>());
    o.value = doc.at("value").get<double>();
    o.certificate = doc.at("certificate").get<std::vector<std::int64_t>>();
    o.is_exact = doc.at("is_exact").get<bool>();
    o.bound = doc.at("bound").get<double>();
    o.guarantee = doc.at("guarantee").get<bool>();
    if (doc.contains("epsilon")) o.epsilon = doc.at("epsilon").get<double>();
    return o;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed outcome document: ") + e.what());
  }
}

namespace {

std::vector<Vertex> as_vertices(const std::vector<std::int64_t>& cert, int n) {
  std::vector<Vertex> out;
  for (auto c : cert) {
    if (c < 0 || c >= n) throw InputError("certificate vertex " + std::to_string(c) + " out of range");
    out.push_back(static_cast<Vertex>(c));
  }
  return out;
}

template <typename T>
const T& expect(const Instance& instance) {
  const T* p = std::get_if<T>(&instance);
  if (!p) throw InputError("certificate does not match the instance kind");
  return *p;
}

}  // namespace

double evaluate_certificate(const Instance& instance, const SolveOutcome& outcome) {
  const auto& cert = outcome.certificate;
  switch (outcome.problem) {
    case Problem::VertexCover: {
      const auto& g = expect<WeightedGraph>(instance);
      auto cover = as_vertices(cert, g.n());
      std::sort(cover.begin(), cover.end());
      if (std::adjacent_find(cover.begin(), cover.end()) != cover.end()) throw InputError("repeated cover vertex");
      if (!is_vertex_cover(g, cover)) throw InputError("certificate leaves an edge uncovered");
      return static_cast<double>(cover.size());
    }
    case Problem::Tsp: {
      const auto& m = expect<MetricInstance>(instance);
      const auto order = as_vertices(cert, m.n());
      return evaluate_tour(m, order);
    }
    case Problem::SubsetSum: {
      const auto& s = expect<SubsetSumInstance>(instance);
      if (outcome.algorithm == Algorithm::SubsetSumFptas) {
        if (!cert.empty()) throw InputError("the approximation reports no witness");
        return outcome.value;
      }
      // Multiset inclusion against the (ascending) instance set.
      std::vector<std::int64_t> chosen = cert;
      std::sort(chosen.begin(), chosen.end());
      if (!std::includes(s.set().begin(), s.set().end(), chosen.begin(), chosen.end())) {
        throw InputError("certificate is not a sub-multiset of the instance set");
      }
      std::int64_t sum = 0;
      for (auto x : chosen) sum += x;
      if (sum > s.target()) throw InputError("certificate exceeds the target");
      return static_cast<double>(sum);
    }
    case Problem::Knapsack: {
      const auto& k = expect<KnapsackInstance>(instance);
      std::vector<std::size_t> idx;
      for (auto c : cert) {
        if (c < 0) throw InputError("negative item index");
        idx.push_back(static_cast<std::size_t>(c));
      }
      const KnapsackSolution sol = evaluate_selection(k, std::move(idx));
      if (sol.total_weight > k.capacity()) throw InputError("certificate exceeds the capacity");
      return static_cast<double>(sol.total_value);
    }
    case Problem::Hamiltonian: {
      const auto& g = expect<WeightedGraph>(instance);
      if (cert.empty()) return 0.0;
      const auto order = as_vertices(cert, g.n());
      if (static_cast<int>(order.size()) != g.n()) throw InputError("cycle does not visit every vertex");
      std::vector<bool> seen(static_cast<std::size_t>(g.n()), false);
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (seen[static_cast<std::size_t>(order[i])]) throw InputError("cycle repeats a vertex");
        seen[static_cast<std::size_t>(order[i])] = true;
        if (!g.has_edge(order[i], order[(i + 1) % order.size()])) throw InputError("cycle uses a missing edge");
      }
      return static_cast<double>(order.size());
    }
  }
  throw InputError("unknown problem");
}

}  // namespace approx
