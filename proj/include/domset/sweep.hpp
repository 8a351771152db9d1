#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "domset/bounds.hpp"
#include "domset/generators.hpp"
#include "domset/params.hpp"
#include "domset/solver.hpp"

namespace domset {

/// Corpus description: every family × size × seed × triple combination.
/// Deterministic families ignore seeds, and petersen also ignores sizes.
struct SweepSpec {
  std::vector<Family> families;
  std::vector<int> sizes;
  std::vector<std::uint64_t> seeds{0};
  std::vector<ParamTriple> triples;
  int degree = 3;               // random_regular
  int bipartite_part = 0;       // complete_bipartite second part; 0 means equal to n
  double probability = 0.5;     // random_gnp
  SolveBudget budget;
  unsigned threads = 1;         // rows evaluated concurrently; 0 = hardware concurrency
};

struct SweepRow {
  Family family = Family::path;
  std::optional<std::uint64_t> seed;
  BoundReport bounds;
  SolveResult solve;
  std::optional<bool> lb_tight;
  std::optional<bool> ub_tight;
  bool dominance_ok = true;
  bool soundness_ok = true;
  std::vector<std::string> failures;
};

struct SweepOutcome {
  std::vector<SweepRow> rows;
  int violations = 0;
  int budget_exceeded = 0;

  /// 0 all checks pass, 1 a violation, 3 some instance ran out of budget.
  int exit_code() const;
};

/// Evaluates one (graph, triple) pair: bounds, exact solve, constructions and
/// every applicable soundness and improvement check.
SweepRow evaluate_instance(const Graph& g, const ParamTriple& p, const SolveBudget& budget);

/// Rows come back in corpus order regardless of thread count. Throws
/// GraphError when a family cannot be built at a requested size.
SweepOutcome run_sweep(const SweepSpec& spec);

std::string sweep_csv_header();
std::string to_csv(const SweepRow& row);
void write_sweep_csv(const SweepOutcome& outcome, std::ostream& out);

}  // namespace domset
