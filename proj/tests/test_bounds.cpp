#include <doctest.h>

#include "domset/bounds.hpp"
#include "domset/generators.hpp"
#include "domset/solver.hpp"
#include "oracles.hpp"

using namespace domset;

TEST_CASE("rational arithmetic helpers") {
  CHECK(Rational(6, 3) == Rational(2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(8, 3).ceil() == 3);
  CHECK(Rational(-8, 3).ceil() == -2);
  CHECK(Rational(6, 3).ceil() == 2);
  CHECK(Rational(8, 3).to_decimal(6) == "2.666667");
  CHECK(Rational(-1, 3).to_decimal(6) == "-0.333333");
  CHECK(Rational(5).to_decimal(6) == "5.000000");
  CHECK(Rational(1, 2000000).to_decimal(6) == "0.000001");
  CHECK(Rational(7, 4).to_string() == "7/4");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("delta_star") {
  CHECK(delta_star(path_graph(4), ParamTriple(0, 1, 1)) == 2);
  CHECK(delta_star(star_graph(3), ParamTriple(0, 1, 1)) == 3);
  CHECK_FALSE(delta_star(complete_graph(2), ParamTriple(0, 1, 1)).has_value());
}

TEST_CASE("lower_bound_general: worked examples") {
  const auto p4 = lower_bound_general(path_graph(4), ParamTriple(0, 1, 1));
  REQUIRE(p4);
  CHECK(p4->value == 2);
  CHECK(p4->raw == Rational(2));

  const auto k4 = lower_bound_general(complete_graph(4), ParamTriple(0, 1, 1));
  REQUIRE(k4);
  CHECK(k4->value == 1);

  const auto c4 = lower_bound_general(cycle_graph(4), ParamTriple(1, 1, 1));
  REQUIRE(c4);
  CHECK(c4->value == 2);

  const auto k2 = lower_bound_general(complete_graph(2), ParamTriple(0, 1, 1));
  REQUIRE(k2);
  CHECK(k2->value == 2);
  CHECK(k2->delta_star_absent);
}

TEST_CASE("lower_bound_general: inapplicable cases and clamping") {
  CHECK_FALSE(lower_bound_general(path_graph(4), ParamTriple(2, 1, 1)).has_value());  // δ < k
  CHECK_FALSE(lower_bound_general(cycle_graph(4), ParamTriple(2, 0, 0)).has_value());  // δ* + k' - k = 0
  CHECK_FALSE(lower_bound_general(Graph::build(0, {}), ParamTriple(0, 1, 1)).has_value());
  // K7 plus a pendant vertex: δ* = 1 while m is large, so the raw value is
  // negative and the reported bound is 0.
  std::vector<Edge> edges(complete_graph(7).edges());
  edges.push_back({0, 7});
  const auto dense = lower_bound_general(Graph::build(8, edges), ParamTriple(0, 1, 0));
  REQUIRE(dense);
  CHECK(dense->raw < Rational(0));
  CHECK(dense->value == 0);
}

TEST_CASE("lower_bound_kp_zero") {
  const auto c4 = lower_bound_kp_zero(cycle_graph(4), ParamTriple(0, 2, 0));
  REQUIRE(c4);
  CHECK(c4->value == 2);

  const auto k4 = lower_bound_kp_zero(complete_graph(4), ParamTriple(2, 2, 0));
  REQUIRE(k4);
  CHECK(k4->raw == Rational(8, 3));
  CHECK(k4->value == 3);

  for (const Graph& g : testing::random_corpus(30, 10, 1)) {
    const auto zero = lower_bound_kp_zero(g, ParamTriple(0, 0, 0));
    REQUIRE(zero);
    CHECK(zero->value == 0);
  }
  CHECK_FALSE(lower_bound_kp_zero(cycle_graph(4), ParamTriple(0, 2, 1)).has_value());
  CHECK_FALSE(lower_bound_kp_zero(path_graph(4), ParamTriple(2, 2, 0)).has_value());
}

TEST_CASE("prior bounds: worked examples") {
  const auto tree_tr = prior_bounds(path_graph(4), ParamTriple(1, 1, 1));
  REQUIRE(tree_tr.at(PriorBound::eq5_tree));
  CHECK(tree_tr.at(PriorBound::eq5_tree)->value == 3);

  const auto tree_r = prior_bounds(path_graph(4), ParamTriple(0, 1, 1));
  REQUIRE(tree_r.at(PriorBound::eq6_tree));
  CHECK(tree_r.at(PriorBound::eq6_tree)->value == 2);
  CHECK_FALSE(tree_r.at(PriorBound::eq5_tree).has_value());

  const auto c4 = prior_bounds(cycle_graph(4), ParamTriple(1, 2, 1));
  REQUIRE(c4.at(PriorBound::eq8));
  CHECK(c4.at(PriorBound::eq8)->value == 3);
  CHECK_FALSE(c4.at(PriorBound::eq3).has_value());

  // eq3 needs no isolated vertex.
  CHECK_FALSE(prior_bounds(Graph::build(3, {{0, 1}}), ParamTriple(1, 1, 1)).at(PriorBound::eq3).has_value());
  // Tree bounds need a tree.
  CHECK_FALSE(prior_bounds(cycle_graph(5), ParamTriple(0, 1, 1)).at(PriorBound::eq6_tree).has_value());

  const auto tuple = prior_bounds(complete_graph(5), ParamTriple(1, 2, 0));
  CHECK(tuple.at(PriorBound::hh_tuple)->raw == Rational(2 * 2 * 5 - 2 * 10, 3));
  CHECK(tuple.at(PriorBound::hh_ratio)->raw == Rational(10, 5));
  CHECK_FALSE(tuple.at(PriorBound::fj2_kdom).has_value());
}

TEST_CASE("bound_report: worked examples") {
  const auto k6 = bound_report(complete_graph(6), ParamTriple(1, 2, 1));
  REQUIRE(k6.lb_general);
  CHECK(k6.lb_general->value == 2);
  CHECK(k6.ub_construct == 2);
  CHECK(k6.applicability.at("ub_construct_part1"));
  CHECK_FALSE(k6.applicability.at("ub_construct_part2"));

  const auto c4 = bound_report(cycle_graph(4), ParamTriple(0, 2, 0));
  REQUIRE(c4.lb_kp_zero);
  CHECK(c4.lb_kp_zero->value == 2);

  const auto k2 = bound_report(complete_graph(2), ParamTriple(0, 1, 1));
  REQUIRE(k2.lb_general);
  CHECK(k2.lb_general->value == 2);
  CHECK(k2.applicability.at("lb_general_delta_star_absent"));

  for (const auto& [name, value] : k6.prior)
    CHECK(k6.applicability.at(std::string(to_string(name))) == value.has_value());
}

TEST_CASE("delta_star is at least max(min degree, k'+k'')") {
  for (const Graph& g : testing::random_corpus(80, 12, 2))
    for (const auto& p : testing::all_triples(3))
      if (const auto ds = delta_star(g, p)) {
        CHECK(*ds >= g.min_degree());
        CHECK(*ds >= p.kp() + p.kpp());
      }
}

TEST_CASE("cubic specializations evaluate to n/4, n/3, n/2") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (int n : {4, 8, 10, 16, 22}) {
      const Graph g = random_regular(n, 3, seed);
      CHECK(lower_bound_general(g, ParamTriple(0, 1, 1))->raw == Rational(n, 4));
      CHECK(lower_bound_general(g, ParamTriple(1, 1, 1))->raw == Rational(n, 3));
      CHECK(lower_bound_general(g, ParamTriple(1, 2, 1))->raw == Rational(n, 2));
      CHECK(lower_bound_general(g, ParamTriple(1, 2, 1))->value == (n + 1) / 2);
    }
  }
}

TEST_CASE("improvement dominance over a random corpus") {
  int checked = 0;
  for (const Graph& g : testing::random_corpus(200, 14, 8)) {
    for (const auto& p : testing::all_triples(3)) {
      for (const auto& c : dominance_checks(bound_report(g, p))) {
        ++checked;
        CHECK_MESSAGE(c.ok, to_string(c.prior), " triple ", p.to_string());
      }
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("lower bounds are sound against brute force") {
  for (const Graph& g : testing::random_corpus(90, 10, 13)) {
    for (const auto& p : testing::all_triples(3)) {
      const auto exact = brute_force_oracle(g, p);
      if (exact.status != SolveStatus::optimal) continue;
      const auto report = bound_report(g, p);
      if (report.lb_general) CHECK(*exact.gamma >= report.lb_general->value);
      if (report.lb_kp_zero) CHECK(*exact.gamma >= report.lb_kp_zero->value);
      if (report.ub_construct) CHECK(*exact.gamma <= *report.ub_construct);
      if (report.best_lower() && report.ub_construct) CHECK(*report.best_lower() <= *report.ub_construct);
    }
  }
}
