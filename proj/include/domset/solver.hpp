#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "domset/graph.hpp"
#include "domset/params.hpp"
#include "domset/vertex_set.hpp"

namespace domset {

enum class SolveStatus { optimal, infeasible, budget_exceeded };

std::string_view to_string(SolveStatus s);

struct SolveBudget {
  std::uint64_t max_nodes = 100'000'000;
  std::chrono::milliseconds max_time{60'000};
};

struct SolveOptions {
  SolveBudget budget;
  /// Stop as soon as the incumbent meets the closed-form lower bounds.
  bool bound_pruning = true;
  /// Search workers; 0 picks the hardware concurrency.
  unsigned threads = 1;
};

struct SolveResult {
  SolveStatus status = SolveStatus::infeasible;
  std::optional<int> gamma;          // iff optimal
  std::optional<VertexSet> witness;  // iff optimal
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Exact minimum (k,k',k'')-dominating set by branch and bound over
/// in/out/undecided vertex states with constraint propagation.
///
/// gamma and status do not depend on the worker count; the witness may.
/// Never reports a wrong answer: running out of budget yields budget_exceeded.
SolveResult solve_exact(const Graph& g, const ParamTriple& p, const SolveOptions& options = {});

inline constexpr int kOracleMaxVertices = 20;

/// Enumerates subsets in order of increasing size and returns the first
/// dominating one. Throws std::invalid_argument above kOracleMaxVertices.
SolveResult brute_force_oracle(const Graph& g, const ParamTriple& p);

}  // namespace domset
