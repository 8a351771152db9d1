#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "domset/bounds.hpp"
#include "domset/construction.hpp"
#include "domset/edgelist.hpp"
#include "domset/generators.hpp"
#include "domset/json_io.hpp"
#include "domset/params.hpp"
#include "domset/solver.hpp"
#include "domset/sweep.hpp"

namespace domset::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename T>
T parse_number(const std::string& text, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw UsageError(std::string("invalid ") + what + " '" + text + "'");
  return value;
}

double parse_probability(const std::string& text) {
  std::istringstream in(text);
  double p = 0;
  if (!(in >> p) || !in.eof()) throw UsageError("invalid probability '" + text + "'");
  return p;
}

// "4,6,8", "2..10" or a mix such as "2..4,8".
template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    const auto dots = piece.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_number<T>(piece, what));
      continue;
    }
    const T lo = parse_number<T>(piece.substr(0, dots), what);
    const T hi = parse_number<T>(piece.substr(dots + 2), what);
    if (hi < lo) throw UsageError(std::string("empty range for ") + what + " '" + piece + "'");
    for (T v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string("no ") + what + " given");
  return out;
}

unsigned env_threads() {
  const char* raw = std::getenv("DOMSET_THREADS");
  if (raw == nullptr || *raw == '\0') return 1;
  return parse_number<unsigned>(raw, "DOMSET_THREADS");
}

VertexSet parse_set(const std::string& text, int n) {
  std::vector<Vertex> members;
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::string token;
  while (in >> token) members.push_back(parse_number<Vertex>(token, "vertex"));
  try {
    return VertexSet::of(n, members);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

GraphSpec gen_spec(Family family, const std::vector<std::string>& params) {
  auto expect = [&](std::size_t count) {
    if (params.size() != count)
      throw UsageError(std::string(to_string(family)) + " takes " + std::to_string(count) + " size parameter(s)");
  };
  GraphSpec spec;
  spec.family = family;
  switch (family) {
    case Family::petersen:
      expect(0);
      break;
    case Family::complete_bipartite:
    case Family::random_regular:
      expect(2);
      spec.n = parse_number<int>(params[0], "size");
      spec.second = parse_number<int>(params[1], "size");
      break;
    case Family::random_gnp:
      expect(2);
      spec.n = parse_number<int>(params[0], "size");
      spec.probability = parse_probability(params[1]);
      break;
    default:
      expect(1);
      spec.n = parse_number<int>(params[0], "size");
  }
  return spec;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

SolveBudget make_budget(std::uint64_t nodes, double secs) {
  SolveBudget b;
  b.max_nodes = nodes;
  b.max_time = std::chrono::milliseconds(static_cast<std::int64_t>(secs * 1000.0));
  return b;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compute, bound, construct and verify (k,k',k'')-dominating sets", "domset"};
  app.require_subcommand(1);

  std::string graph_path, triple_text, out_path, set_text;
  bool json = false;
  std::uint64_t seed = 0;
  const SolveBudget defaults;
  std::uint64_t budget_nodes = defaults.max_nodes;
  double budget_secs = static_cast<double>(defaults.max_time.count()) / 1000.0;

  auto add_graph = [&](CLI::App* cmd) { cmd->add_option("--graph", graph_path, "Edge-list file")->required(); };
  auto add_triple = [&](CLI::App* cmd) {
    cmd->add_option("--triple", triple_text, "k,k',k'' or a parameter name such as k_tuple:2")->required();
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget-nodes", budget_nodes, "Search node limit per instance");
    cmd->add_option("--budget-secs", budget_secs, "Wall-clock limit per instance");
  };

  std::string family_name;
  std::vector<std::string> gen_params;
  auto* gen = app.add_subcommand("gen", "Generate a graph in edge-list format");
  gen->add_option("family", family_name, "Graph family")->required();
  gen->add_option("params", gen_params, "Size parameters");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--out", out_path, "Output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a vertex set against a triple");
  add_graph(verify);
  add_triple(verify);
  verify->add_option("--set", set_text, "Vertices of S, comma or space separated")->required();
  verify->add_flag("--json", json, "JSON output (always on)");

  auto* bound = app.add_subcommand("bound", "Report every applicable bound");
  add_graph(bound);
  add_triple(bound);
  bound->add_flag("--json", json, "JSON output (always on)");

  int part = 0;
  auto* construct = app.add_subcommand("construct", "Build the upper-bound witness for a (k,k',1) triple");
  add_graph(construct);
  add_triple(construct);
  construct->add_option("--part", part, "Force construction part 1 or 2")->check(CLI::IsMember({1, 2}));
  construct->add_flag("--json", json, "JSON output (always on)");

  bool no_pruning = false;
  auto* solve = app.add_subcommand("solve", "Exact domination number");
  add_graph(solve);
  add_triple(solve);
  add_budget(solve);
  solve->add_flag("--no-bound-pruning", no_pruning, "Disable early exit on the closed-form lower bounds");
  solve->add_flag("--json", json, "JSON output (always on)");

  std::vector<std::string> families, sweep_triples;
  std::string sizes_text, seeds_text = "0";
  int max_param = -1, degree = 3, part_size = 0;
  std::string probability_text = "0.5";
  auto* sweep = app.add_subcommand("sweep", "Evaluate every claim over a generated corpus");
  sweep->add_option("--family", families, "Graph families (repeatable or comma separated)")->required()->delimiter(',');
  sweep->add_option("--sizes", sizes_text, "Sizes, e.g. 4,6,8 or 2..10")->required();
  sweep->add_option("--seeds", seeds_text, "Seeds for random families, e.g. 1..20");
  sweep->add_option("--seed", seed, "Single seed (overrides --seeds)");
  sweep->add_option("--triple", sweep_triples, "Triple to evaluate (repeatable)");
  sweep->add_option("--max-param", max_param, "Add every triple with entries in 0..N");
  sweep->add_option("--degree", degree, "Degree for random_regular");
  sweep->add_option("--part-size", part_size, "Second part for complete_bipartite (default: same as size)");
  sweep->add_option("--p", probability_text, "Edge probability for random_gnp");
  sweep->add_option("--out", out_path, "CSV path (default stdout)");
  sweep->add_flag("--json", json, "Print the summary as JSON");
  add_budget(sweep);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      const GraphSpec spec = gen_spec(parse_family(family_name), gen_params);
      emit(write_edgelist(generate(spec, seed)), out_path, out);
      return kOk;
    }

    if (*sweep) {
      SweepSpec spec;
      for (const auto& f : families) spec.families.push_back(parse_family(f));
      spec.sizes = parse_list<int>(sizes_text, "size");
      spec.seeds = sweep->count("--seed") ? std::vector<std::uint64_t>{seed}
                                          : parse_list<std::uint64_t>(seeds_text, "seed");
      for (const auto& t : sweep_triples) spec.triples.push_back(parse_triple(t));
      for (int k = 0; k <= max_param; ++k)
        for (int kp = 0; kp <= max_param; ++kp)
          for (int kpp = 0; kpp <= max_param; ++kpp) spec.triples.emplace_back(k, kp, kpp);
      if (spec.triples.empty()) throw UsageError("sweep needs --triple or --max-param");
      spec.degree = degree;
      spec.bipartite_part = part_size;
      spec.probability = parse_probability(probability_text);
      spec.budget = make_budget(budget_nodes, budget_secs);
      spec.threads = env_threads();

      const SweepOutcome outcome = run_sweep(spec);
      std::ostringstream csv;
      write_sweep_csv(outcome, csv);
      emit(csv.str(), out_path, out);

      for (const auto& row : outcome.rows)
        for (const auto& f : row.failures)
          err << "violation [" << to_string(row.family) << " n=" << row.bounds.n << " triple "
              << row.bounds.triple.to_string() << "]: " << f << '\n';
      if (json) {
        Json summary;
        summary["rows"] = outcome.rows.size();
        summary["violations"] = outcome.violations;
        summary["budget_exceeded"] = outcome.budget_exceeded;
        err << summary.dump() << '\n';
      } else {
        err << "rows=" << outcome.rows.size() << " violations=" << outcome.violations
            << " budget_exceeded=" << outcome.budget_exceeded << '\n';
      }
      return outcome.exit_code();
    }

    const Graph g = read_edgelist_file(graph_path);
    const ParamTriple p = parse_triple(triple_text);

    if (*verify) {
      const auto violations = violation_report(g, parse_set(set_text, g.vertex_count()), p);
      out << violations_to_json(violations).dump() << '\n';
      return violations.empty() ? kOk : kViolation;
    }

    if (*bound) {
      out << to_json(bound_report(g, p)).dump() << '\n';
      return kOk;
    }

    if (*construct) {
      std::optional<Construction> c;
      if (part == 1) c = construct_part1(g, p);
      else if (part == 2) c = construct_part2(g, p);
      else c = best_construction(g, p);
      if (!c) throw InapplicableError("no construction part applies to triple " + p.to_string());
      const bool valid = is_dominating(g, c->set, p);
      const auto members = c->set.to_vector();
      for (std::size_t i = 0; i < members.size(); ++i) out << (i ? " " : "") << members[i];
      out << '\n' << to_json(*c, valid).dump() << '\n';
      return valid ? kOk : kViolation;
    }

    if (*solve) {
      SolveOptions opts;
      opts.budget = make_budget(budget_nodes, budget_secs);
      opts.bound_pruning = !no_pruning;
      opts.threads = env_threads();
      const SolveResult r = solve_exact(g, p, opts);
      out << to_json(r).dump() << '\n';
      return r.status == SolveStatus::budget_exceeded ? kBudgetExceeded : kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace domset::cli
