#include "domset/bounds.hpp"

#include <algorithm>

#include "domset/construction.hpp"

namespace domset {

namespace {

LowerBound make_lower(Rational raw, bool absent = false) {
  const auto c = std::max<std::int64_t>(0, raw.ceil());
  return {raw, static_cast<int>(c), absent};
}

PriorValue make_prior(Rational raw) {
  return {raw, static_cast<int>(std::max<std::int64_t>(0, raw.ceil()))};
}

bool is(const ParamTriple& p, int k, int kp, int kpp) {
  return p.k() == k && p.kp() == kp && p.kpp() == kpp;
}

}  // namespace

std::optional<int> delta_star(const Graph& g, const ParamTriple& p) {
  std::optional<int> best;
  const int threshold = p.kp() + p.kpp();
  for (int d : g.degrees())
    if (d >= threshold && (!best || d < *best)) best = d;
  return best;
}

std::optional<LowerBound> lower_bound_general(const Graph& g, const ParamTriple& p) {
  const int n = g.vertex_count();
  if (n == 0 || g.min_degree() < p.k()) return std::nullopt;
  const auto ds = delta_star(g, p);
  if (!ds) return make_lower(Rational(n), true);
  const std::int64_t den = std::int64_t{*ds} + p.kp() - p.k();
  if (den <= 0) return std::nullopt;
  const std::int64_t num = (std::int64_t{p.kp()} + *ds) * n - 2 * std::int64_t{g.edge_count()};
  return make_lower(Rational(num, den));
}

std::optional<LowerBound> lower_bound_kp_zero(const Graph& g, const ParamTriple& p) {
  const int n = g.vertex_count();
  if (n == 0 || p.kpp() != 0 || g.min_degree() < p.k()) return std::nullopt;
  if (p.kp() == 0) return make_lower(Rational(0));
  const std::int64_t den = std::int64_t{g.max_degree()} + p.kp() - p.k();
  if (den <= 0) return std::nullopt;
  return make_lower(Rational(std::int64_t{p.kp()} * n, den));
}

std::string_view to_string(PriorBound b) {
  switch (b) {
    case PriorBound::eq3: return "eq3";
    case PriorBound::eq4: return "eq4";
    case PriorBound::eq5_tree: return "eq5_tree";
    case PriorBound::eq6_tree: return "eq6_tree";
    case PriorBound::eq7: return "eq7";
    case PriorBound::eq8: return "eq8";
    case PriorBound::hh_tuple: return "hh_tuple";
    case PriorBound::zwx_tuple_total: return "zwx_tuple_total";
    case PriorBound::fj2_kdom: return "fj2_kdom";
    case PriorBound::hk_zwx_ratio: return "hk_zwx_ratio";
    case PriorBound::hh_ratio: return "hh_ratio";
    case PriorBound::fj1_ratio: return "fj1_ratio";
  }
  return "unknown";
}

bool is_ratio_bound(PriorBound b) {
  return b == PriorBound::hk_zwx_ratio || b == PriorBound::hh_ratio || b == PriorBound::fj1_ratio;
}

std::map<PriorBound, std::optional<PriorValue>> prior_bounds(const Graph& g, const ParamTriple& p) {
  std::map<PriorBound, std::optional<PriorValue>> out;
  for (PriorBound b : kAllPriorBounds) out[b] = std::nullopt;
  const std::int64_t n = g.vertex_count();
  if (n == 0) return out;
  const std::int64_t m = g.edge_count();
  const int delta = g.min_degree();
  const std::int64_t Delta = g.max_degree();
  const bool no_isolated = !g.has_isolated_vertex();
  const bool tree = g.is_tree();

  if (is(p, 1, 1, 1) && no_isolated) out[PriorBound::eq3] = make_prior(Rational(3 * n - 2 * m, 2));
  if (is(p, 0, 1, 1)) out[PriorBound::eq4] = make_prior(Rational(3 * n - 2 * m, 3));
  if (is(p, 1, 1, 1) && tree && n >= 2) out[PriorBound::eq5_tree] = make_prior(Rational(n + 2, 2));
  if (is(p, 0, 1, 1) && tree) out[PriorBound::eq6_tree] = make_prior(Rational(n + 2, 3));

  const std::int64_t k = p.k();
  if (k >= 1 && p.kp() == k && p.kpp() == k && delta >= k)
    out[PriorBound::eq7] = make_prior(Rational(3 * n * k - 2 * m, 2 * k));
  if (is(p, 1, 2, 1) && no_isolated) out[PriorBound::eq8] = make_prior(Rational(5 * n - 2 * m, 4));

  // (k-1,k,0): the tuple index is k' here.
  const std::int64_t t = p.kp();
  if (p.kpp() == 0 && t >= 1 && p.k() == t - 1 && delta >= t - 1) {
    out[PriorBound::hh_tuple] = make_prior(Rational(2 * t * n - 2 * m, t + 1));
    out[PriorBound::hh_ratio] = make_prior(Rational(t * n, Delta + 1));
  }
  if (p.kpp() == 0 && k >= 1 && p.kp() == k && delta >= k) {
    out[PriorBound::zwx_tuple_total] = make_prior(Rational(2 * (n * k - m), k));
    out[PriorBound::hk_zwx_ratio] = make_prior(Rational(k * n, Delta));
  }
  if (p.k() == 0 && p.kpp() == 0 && t >= 1) {
    out[PriorBound::fj2_kdom] = make_prior(Rational(n * t - m, t));
    out[PriorBound::fj1_ratio] = make_prior(Rational(t * n, Delta + t));
  }
  return out;
}

std::optional<int> BoundReport::best_lower() const {
  std::optional<int> best;
  for (const auto& lb : {lb_general, lb_kp_zero})
    if (lb && (!best || lb->value > *best)) best = lb->value;
  return best;
}

BoundReport bound_report(const Graph& g, const ParamTriple& p) {
  BoundReport r;
  r.triple = p;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.min_degree = g.min_degree();
  r.max_degree = g.max_degree();
  r.delta_star = delta_star(g, p);
  r.lb_general = lower_bound_general(g, p);
  r.lb_kp_zero = lower_bound_kp_zero(g, p);
  r.prior = prior_bounds(g, p);
  r.ub_construct = upper_bound(g, p);

  r.applicability["lb_general"] = r.lb_general.has_value();
  r.applicability["lb_general_delta_star_absent"] = r.lb_general && r.lb_general->delta_star_absent;
  r.applicability["lb_kp_zero"] = r.lb_kp_zero.has_value();
  r.applicability["ub_construct_part1"] = part1_applies(g, p);
  r.applicability["ub_construct_part2"] = part2_applies(g, p);
  for (const auto& [b, v] : r.prior) r.applicability[std::string(to_string(b))] = v.has_value();
  return r;
}

std::vector<DominanceCheck> dominance_checks(const BoundReport& report) {
  std::vector<DominanceCheck> out;
  for (const auto& [b, v] : report.prior) {
    if (!v) continue;
    const auto& ours = is_ratio_bound(b) ? report.lb_kp_zero : report.lb_general;
    DominanceCheck c{b, std::nullopt, v->raw, false};
    if (ours) {
      c.improved = ours->raw;
      c.ok = ours->raw >= v->raw;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace domset
