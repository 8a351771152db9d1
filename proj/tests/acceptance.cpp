// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "domset/bounds.hpp"
#include "domset/construction.hpp"
#include "domset/generators.hpp"
#include "domset/solver.hpp"
#include "oracles.hpp"

using namespace domset;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  if (!ok) ++failures;
}

struct Instance {
  const Graph* graph;
  ParamTriple triple;
  SolveResult oracle;
  SolveResult exact;
  SolveResult exact_unpruned;
};

std::vector<Graph> structured_corpus() {
  std::vector<Graph> out;
  for (int n = 5; n <= 9; ++n) out.push_back(complete_graph(n));
  for (int n = 3; n <= 12; ++n) out.push_back(cycle_graph(n));
  for (int n = 2; n <= 12; ++n) out.push_back(path_graph(n));
  for (int a = 1; a <= 5; ++a)
    for (int b = a; b <= 6; ++b) out.push_back(complete_bipartite_graph(a, b));
  for (int leaves = 1; leaves <= 8; ++leaves) out.push_back(star_graph(leaves));
  out.push_back(petersen_graph());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    out.push_back(random_gnp(11, 0.75, seed));
    out.push_back(random_regular(12, 3 + static_cast<int>(seed % 4), seed));
  }
  return out;
}

}  // namespace

int main() {
  // Criterion-1 corpus: G(n,p), random trees and random regular graphs, n <= 12.
  const std::vector<Graph> random = testing::random_corpus(600, 12, 20240611);
  const std::vector<Graph> structured = structured_corpus();
  const auto triples = testing::all_triples(3);

  std::vector<const Graph*> corpus;
  for (const auto& g : random) corpus.push_back(&g);
  for (const auto& g : structured) corpus.push_back(&g);

  SolveOptions unpruned;
  unpruned.bound_pruning = false;

  std::vector<Instance> instances;
  instances.reserve(corpus.size() * triples.size());
  for (const Graph* g : corpus)
    for (const auto& p : triples)
      instances.push_back({g, p, brute_force_oracle(*g, p), solve_exact(*g, p), solve_exact(*g, p, unpruned)});
  const std::size_t random_instances = random.size() * triples.size();

  // 1. Oracle equivalence on the random corpus.
  {
    std::size_t agree = 0, witness_ok = 0;
    for (std::size_t i = 0; i < random_instances; ++i) {
      const auto& in = instances[i];
      if (in.exact.status == in.oracle.status && in.exact.gamma == in.oracle.gamma) ++agree;
      if (!in.exact.witness || is_dominating(*in.graph, *in.exact.witness, in.triple)) ++witness_ok;
    }
    report(1, "oracle equivalence", random.size() >= 500 && agree == random_instances && witness_ok == random_instances,
           std::to_string(random.size()) + " graphs, " + std::to_string(agree) + "/" +
               std::to_string(random_instances) + " instances agree, " + std::to_string(witness_ok) +
               " witnesses verified");
  }

  // 2. Lower-bound soundness.
  {
    std::size_t general = 0, kp_zero = 0, violations = 0;
    for (const auto& in : instances) {
      if (in.oracle.status != SolveStatus::optimal) continue;
      const int gamma = *in.oracle.gamma;
      if (const auto lb = lower_bound_general(*in.graph, in.triple)) {
        ++general;
        if (gamma < lb->value) ++violations;
      }
      if (const auto lb = lower_bound_kp_zero(*in.graph, in.triple)) {
        ++kp_zero;
        if (gamma < lb->value) ++violations;
      }
    }
    report(2, "lower-bound soundness", violations == 0 && general > 0 && kp_zero > 0,
           std::to_string(general) + " general + " + std::to_string(kp_zero) + " k''=0 checks, " +
               std::to_string(violations) + " violations");
  }

  // 3. Improvement dominance on exact rationals.
  {
    std::map<PriorBound, std::size_t> checked;
    std::size_t violations = 0;
    for (const Graph* g : corpus)
      for (const auto& p : triples)
        for (const auto& c : dominance_checks(bound_report(*g, p))) {
          ++checked[c.prior];
          if (!c.ok) ++violations;
        }
    bool covered = true;
    std::string detail;
    for (PriorBound b : kAllPriorBounds) {
      covered = covered && checked[b] > 0;
      detail += std::string(to_string(b)) + "=" + std::to_string(checked[b]) + " ";
    }
    report(3, "improvement dominance", violations == 0 && covered,
           detail + "| " + std::to_string(violations) + " violations");
  }

  // 4. Cubic corollaries.
  {
    int graphs = 0, mismatches = 0;
    for (int n = 4; n <= 30; n += 2) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Graph g = random_regular(n, 3, 1000 + seed);
        ++graphs;
        const auto r = lower_bound_general(g, ParamTriple(0, 1, 1));
        const auto tr = lower_bound_general(g, ParamTriple(1, 1, 1));
        const auto dr = lower_bound_general(g, ParamTriple(1, 2, 1));
        if (!r || r->value != (n + 3) / 4) ++mismatches;
        if (!tr || tr->value != (n + 2) / 3) ++mismatches;
        if (!dr || dr->value != (n + 1) / 2) ++mismatches;
      }
    }
    report(4, "cubic corollaries", graphs >= 50 && mismatches == 0,
           std::to_string(graphs) + " cubic graphs, " + std::to_string(mismatches) + " mismatches");
  }

  // 5. Construction validity.
  {
    std::size_t part1 = 0, part2 = 0, violations = 0;
    for (const Graph* g : corpus) {
      const int n = g->vertex_count();
      for (int k = 0; k <= 4; ++k) {
        for (int kp = 0; kp <= 4; ++kp) {
          const ParamTriple p(k, kp, 1);
          if (part1_applies(*g, p)) {
            ++part1;
            const auto c = construct_part1(*g, p);
            if (!is_dominating(*g, c.set, p) || c.size() != n - g->min_degree() + kp - 1) ++violations;
          }
          if (part2_applies(*g, p)) {
            ++part2;
            const auto c = construct_part2(*g, p);
            if (!is_dominating(*g, c.set, p) || c.size() != n - g->min_degree() + k) ++violations;
          }
        }
      }
    }
    report(5, "construction validity", violations == 0 && part1 > 0 && part2 > 0,
           std::to_string(part1) + " part-1 and " + std::to_string(part2) + " part-2 constructions, " +
               std::to_string(violations) + " violations");
  }

  // 6. Sharpness on complete graphs.
  {
    int cases = 0, mismatches = 0;
    for (int n = 5; n <= 9; ++n) {
      const Graph kn = complete_graph(n);
      for (int k = 0; k <= 3; ++k) {
        for (int kp = 1; kp <= 3; ++kp) {
          if (n < std::max(k, kp) + 3) continue;
          const ParamTriple p(k, kp, 1);
          const auto c = best_construction(kn, p);
          if (!c) continue;
          ++cases;
          const SolveResult r = solve_exact(kn, p);
          if (r.status != SolveStatus::optimal || *r.gamma != c->size()) ++mismatches;
        }
      }
    }
    report(6, "sharpness on K_n", cases > 0 && mismatches == 0,
           std::to_string(cases) + " (n, triple) cases, " + std::to_string(mismatches) + " mismatches");
  }

  // 7. Restrained double domination with min degree >= 3.
  {
    int graphs = 0, violations = 0;
    for (const auto& in : instances) {
      if (in.triple != ParamTriple(1, 2, 1) || in.graph->min_degree() < 3) continue;
      ++graphs;
      const int n = in.graph->vertex_count(), delta = in.graph->min_degree();
      if (in.oracle.status != SolveStatus::optimal || *in.oracle.gamma > n - delta + 1 || n - delta + 1 > n - 2)
        ++violations;
    }
    report(7, "restrained double upper bound", graphs > 0 && violations == 0,
           std::to_string(graphs) + " graphs with min degree >= 3, " + std::to_string(violations) + " violations");
  }

  // 8. Pinned values.
  {
    struct Pin {
      const char* name;
      Graph graph;
      ParamTriple triple;
      std::optional<int> gamma;  // empty: infeasible
    };
    const std::vector<Pin> pins = {
        {"restrained(P4)", path_graph(4), ParamTriple(0, 1, 1), 2},
        {"restrained(K2)", complete_graph(2), ParamTriple(0, 1, 1), 2},
        {"total_restrained(C4)", cycle_graph(4), ParamTriple(1, 1, 1), 2},
        {"total_restrained(K_{1,3})", star_graph(3), ParamTriple(1, 1, 1), 4},
        {"2-domination(C4)", cycle_graph(4), ParamTriple(0, 2, 0), 2},
        {"2-tuple total(K4)", complete_graph(4), ParamTriple(2, 2, 0), 3},
        {"restrained_double(K6)", complete_graph(6), ParamTriple(1, 2, 1), 2},
        {"(2,1,0)(K_{1,3})", star_graph(3), ParamTriple(2, 1, 0), std::nullopt},
    };
    int ok = 0;
    std::string bad;
    for (const auto& pin : pins) {
      const SolveResult r = solve_exact(pin.graph, pin.triple);
      const SolveResult o = brute_force_oracle(pin.graph, pin.triple);
      const bool match = pin.gamma ? (r.status == SolveStatus::optimal && r.gamma == pin.gamma && o.gamma == pin.gamma)
                                   : (r.status == SolveStatus::infeasible && o.status == SolveStatus::infeasible);
      if (match) ++ok;
      else bad += std::string(" ") + pin.name;
    }
    report(8, "pinned values", ok == static_cast<int>(pins.size()),
           std::to_string(ok) + "/" + std::to_string(pins.size()) + " match" + (bad.empty() ? "" : ", wrong:" + bad));
  }

  // 9. Pruning admissibility on the criterion-1 corpus.
  {
    std::size_t same = 0, fewer_or_equal = 0;
    for (std::size_t i = 0; i < random_instances; ++i) {
      const auto& in = instances[i];
      if (in.exact.status == in.exact_unpruned.status && in.exact.gamma == in.exact_unpruned.gamma) ++same;
      if (in.exact.nodes_explored <= in.exact_unpruned.nodes_explored) ++fewer_or_equal;
    }
    const double share = static_cast<double>(fewer_or_equal) / static_cast<double>(random_instances);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", share);
    report(9, "pruning admissibility", same == random_instances && share >= 0.90,
           std::to_string(same) + "/" + std::to_string(random_instances) + " identical answers, nodes(pruned) <= " +
               "nodes(unpruned) on " + buf + " of instances");
  }

  std::printf("%s: %d criterion failure(s)\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
