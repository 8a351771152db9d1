#include "domset/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "domset/construction.hpp"

namespace domset {

namespace {

struct Job {
  Family family;
  std::optional<std::uint64_t> seed;
  std::size_t graph_index;
  ParamTriple triple;
};

std::string cell(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }
std::string cell(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : ""; }
std::string cell(bool v) { return v ? "true" : "false"; }

void fail(SweepRow& row, bool soundness, std::string what) {
  (soundness ? row.soundness_ok : row.dominance_ok) = false;
  row.failures.push_back(std::move(what));
}

void check_construction(SweepRow& row, const Graph& g, const ParamTriple& p, int part) {
  const int n = g.vertex_count(), delta = g.min_degree();
  const int expected = part == 1 ? n - delta + p.kp() - 1 : n - delta + p.k();
  try {
    const Construction c = part == 1 ? construct_part1(g, p) : construct_part2(g, p);
    if (!is_dominating(g, c.set, p)) fail(row, true, "part " + std::to_string(part) + " set is not dominating");
    if (c.size() != expected) fail(row, true, "part " + std::to_string(part) + " size differs from formula");
  } catch (const std::logic_error& e) {
    fail(row, true, e.what());
  }
}

}  // namespace

int SweepOutcome::exit_code() const {
  if (violations > 0) return 1;
  if (budget_exceeded > 0) return 3;
  return 0;
}

SweepRow evaluate_instance(const Graph& g, const ParamTriple& p, const SolveBudget& budget) {
  SweepRow row;
  row.bounds = bound_report(g, p);
  SolveOptions opts;
  opts.budget = budget;
  row.solve = solve_exact(g, p, opts);

  const int n = g.vertex_count(), delta = g.min_degree();
  if (part1_applies(g, p)) check_construction(row, g, p, 1);
  if (part2_applies(g, p)) check_construction(row, g, p, 2);

  for (const auto& c : dominance_checks(row.bounds))
    if (!c.ok) fail(row, false, std::string(to_string(c.prior)) + " exceeds the improved bound");

  const auto& b = row.bounds;
  if (b.best_lower() && b.ub_construct && *b.best_lower() > *b.ub_construct)
    fail(row, true, "lower bound exceeds constructed upper bound");

  if (row.solve.status == SolveStatus::infeasible && delta >= p.k())
    fail(row, true, "solver reports infeasible although min degree >= k");

  if (row.solve.status == SolveStatus::optimal) {
    const int gamma = *row.solve.gamma;
    if (!is_dominating(g, *row.solve.witness, p)) fail(row, true, "solver witness is not dominating");
    if (b.lb_general && gamma < b.lb_general->value) fail(row, true, "gamma below lb_general");
    if (b.lb_kp_zero && gamma < b.lb_kp_zero->value) fail(row, true, "gamma below lb_kp_zero");
    if (b.ub_construct && gamma > *b.ub_construct) fail(row, true, "gamma above constructed upper bound");
    if (p == ParamTriple(1, 2, 1) && delta >= 3 && !(gamma <= n - delta + 1 && n - delta + 1 <= n - 2))
      fail(row, true, "restrained double bound n - delta + 1 violated");
    if (const auto lb = b.best_lower()) row.lb_tight = gamma == *lb;
    if (b.ub_construct) row.ub_tight = gamma == *b.ub_construct;
  }
  return row;
}

SweepOutcome run_sweep(const SweepSpec& spec) {
  std::vector<Graph> graphs;
  std::vector<Job> jobs;
  for (Family family : spec.families) {
    const std::vector<int> sizes = family == Family::petersen ? std::vector<int>{10} : spec.sizes;
    for (int size : sizes) {
      GraphSpec gs{family, size, 0, spec.probability};
      if (family == Family::random_regular) gs.second = spec.degree;
      if (family == Family::complete_bipartite) gs.second = spec.bipartite_part > 0 ? spec.bipartite_part : size;

      std::vector<std::optional<std::uint64_t>> seeds;
      if (is_random(family))
        seeds.assign(spec.seeds.begin(), spec.seeds.end());
      else
        seeds.push_back(std::nullopt);

      for (const auto& seed : seeds) {
        graphs.push_back(generate(gs, seed.value_or(0)));
        for (const auto& t : spec.triples) jobs.push_back({family, seed, graphs.size() - 1, t});
      }
    }
  }

  SweepOutcome outcome;
  outcome.rows.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const Job& job = jobs[i];
      SweepRow row = evaluate_instance(graphs[job.graph_index], job.triple, spec.budget);
      row.family = job.family;
      row.seed = job.seed;
      outcome.rows[i] = std::move(row);
    }
  };
  const unsigned threads = spec.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : spec.threads;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  for (const auto& row : outcome.rows) {
    if (!row.dominance_ok || !row.soundness_ok) ++outcome.violations;
    if (row.solve.status == SolveStatus::budget_exceeded) ++outcome.budget_exceeded;
  }
  return outcome;
}

std::string sweep_csv_header() {
  std::string h = "family,n,m,seed,k,kp,kpp,delta,Delta,delta_star,lb_general_raw,lb_general,lb_kp0_raw,lb_kp0";
  for (PriorBound b : kAllPriorBounds) h += ",prior_" + std::string(to_string(b));
  h += ",ub_construct,exact_gamma,status,lb_tight,ub_tight,dominance_ok,soundness_ok";
  return h;
}

std::string to_csv(const SweepRow& row) {
  const auto& b = row.bounds;
  std::string s = std::string(to_string(row.family));
  s += "," + std::to_string(b.n) + "," + std::to_string(b.m);
  s += "," + (row.seed ? std::to_string(*row.seed) : std::string());
  s += "," + std::to_string(b.triple.k()) + "," + std::to_string(b.triple.kp()) + "," + std::to_string(b.triple.kpp());
  s += "," + std::to_string(b.min_degree) + "," + std::to_string(b.max_degree) + "," + cell(b.delta_star);
  s += "," + (b.lb_general ? b.lb_general->raw.to_decimal(6) : std::string());
  s += "," + (b.lb_general ? std::to_string(b.lb_general->value) : std::string());
  s += "," + (b.lb_kp_zero ? b.lb_kp_zero->raw.to_decimal(6) : std::string());
  s += "," + (b.lb_kp_zero ? std::to_string(b.lb_kp_zero->value) : std::string());
  for (PriorBound pb : kAllPriorBounds) {
    const auto& v = b.prior.at(pb);
    s += "," + (v ? std::to_string(v->value) : std::string());
  }
  s += "," + cell(b.ub_construct) + "," + cell(row.solve.gamma) + "," + std::string(to_string(row.solve.status));
  s += "," + cell(row.lb_tight) + "," + cell(row.ub_tight) + "," + cell(row.dominance_ok) + "," +
       cell(row.soundness_ok);
  return s;
}

void write_sweep_csv(const SweepOutcome& outcome, std::ostream& out) {
  out << sweep_csv_header() << '\n';
  for (const auto& row : outcome.rows) out << to_csv(row) << '\n';
}

}  // namespace domset
