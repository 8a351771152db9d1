#include <doctest.h>

#include "domset/generators.hpp"
#include "domset/solver.hpp"
#include "oracles.hpp"

using namespace domset;

namespace {

void check_optimal(const Graph& g, const ParamTriple& p, int gamma) {
  const SolveResult r = solve_exact(g, p);
  REQUIRE(r.status == SolveStatus::optimal);
  CHECK(r.gamma == gamma);
  REQUIRE(r.witness);
  CHECK(r.witness->size() == gamma);
  CHECK(is_dominating(g, *r.witness, p));
}

}  // namespace

TEST_CASE("solve_exact: worked examples") {
  check_optimal(path_graph(4), ParamTriple(0, 1, 1), 2);
  check_optimal(star_graph(3), ParamTriple(1, 1, 1), 4);
  check_optimal(complete_graph(6), ParamTriple(1, 2, 1), 2);
  check_optimal(Graph::build(3, {}), ParamTriple(0, 0, 1), 3);
  check_optimal(Graph::build(0, {}), ParamTriple(1, 1, 1), 0);
  CHECK(solve_exact(star_graph(3), ParamTriple(2, 1, 0)).status == SolveStatus::infeasible);
}

TEST_CASE("brute_force_oracle: worked examples") {
  CHECK(brute_force_oracle(cycle_graph(4), ParamTriple(0, 2, 0)).gamma == 2);
  CHECK(brute_force_oracle(complete_graph(2), ParamTriple(0, 1, 1)).gamma == 2);
  CHECK(brute_force_oracle(Graph::build(3, {}), ParamTriple(0, 0, 1)).gamma == 3);
  CHECK(brute_force_oracle(star_graph(3), ParamTriple(2, 1, 0)).status == SolveStatus::infeasible);
  CHECK_THROWS_AS(brute_force_oracle(path_graph(21), ParamTriple(0, 1, 0)), std::invalid_argument);
}

TEST_CASE("solver matches the brute-force oracle") {
  for (const Graph& g : testing::random_corpus(120, 11, 31)) {
    for (const auto& p : testing::all_triples(3)) {
      const SolveResult exact = solve_exact(g, p);
      const SolveResult oracle = brute_force_oracle(g, p);
      REQUIRE(exact.status == oracle.status);
      CHECK(exact.gamma == oracle.gamma);
      if (exact.witness) CHECK(is_dominating(g, *exact.witness, p));
      if (g.min_degree() >= p.k()) CHECK(exact.status == SolveStatus::optimal);
    }
  }
}

TEST_CASE("bound pruning never changes the answer") {
  SolveOptions off;
  off.bound_pruning = false;
  for (const Graph& g : testing::random_corpus(60, 12, 17)) {
    for (const auto& p : testing::all_triples(2)) {
      const SolveResult with = solve_exact(g, p);
      const SolveResult without = solve_exact(g, p, off);
      CHECK(with.status == without.status);
      CHECK(with.gamma == without.gamma);
      CHECK(with.nodes_explored <= without.nodes_explored);
    }
  }
}

TEST_CASE("worker count does not change gamma") {
  SolveOptions parallel;
  parallel.threads = 4;
  auto corpus = testing::random_corpus(40, 12, 5);
  corpus.push_back(petersen_graph());
  corpus.push_back(random_regular(18, 3, 4));
  corpus.push_back(random_gnp(16, 0.3, 2));
  for (const Graph& g : corpus) {
    for (const auto& p : {ParamTriple(0, 1, 1), ParamTriple(1, 1, 1), ParamTriple(1, 2, 1), ParamTriple(0, 2, 0),
                          ParamTriple(2, 2, 0), ParamTriple(3, 1, 0)}) {
      const SolveResult one = solve_exact(g, p);
      const SolveResult many = solve_exact(g, p, parallel);
      CHECK(one.status == many.status);
      CHECK(one.gamma == many.gamma);
      if (many.witness) CHECK(is_dominating(g, *many.witness, p));
    }
  }
}

TEST_CASE("gamma is monotone in each parameter") {
  for (const Graph& g : testing::random_corpus(50, 10, 44)) {
    for (const auto& p : testing::all_triples(2)) {
      const SolveResult base = solve_exact(g, p);
      if (base.status != SolveStatus::optimal) continue;
      for (const auto& q : {ParamTriple(p.k() + 1, p.kp(), p.kpp()), ParamTriple(p.k(), p.kp() + 1, p.kpp()),
                            ParamTriple(p.k(), p.kp(), p.kpp() + 1)}) {
        const SolveResult harder = solve_exact(g, q);
        if (harder.status == SolveStatus::optimal) CHECK(*harder.gamma >= *base.gamma);
      }
    }
  }
}

TEST_CASE("budget exhaustion is reported, never a wrong answer") {
  SolveOptions tiny;
  tiny.budget.max_nodes = 3;
  tiny.bound_pruning = false;
  const SolveResult r = solve_exact(random_gnp(30, 0.2, 1), ParamTriple(0, 1, 1), tiny);
  CHECK(r.status == SolveStatus::budget_exceeded);
  CHECK_FALSE(r.gamma.has_value());
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("larger instances solve within budget") {
  SolveOptions opts;
  opts.budget.max_time = std::chrono::seconds(30);
  const Graph g = random_regular(24, 3, 9);
  const SolveResult r = solve_exact(g, ParamTriple(0, 1, 1), opts);
  REQUIRE(r.status == SolveStatus::optimal);
  CHECK(*r.gamma >= 6);  // n/4 for cubic graphs
  CHECK(is_dominating(g, *r.witness, ParamTriple(0, 1, 1)));
}
