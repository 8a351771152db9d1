#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domset/graph.hpp"
#include "domset/params.hpp"
#include "domset/rational.hpp"

namespace domset {

/// min{deg(v) : deg(v) >= k'+k''}, absent when no vertex reaches k'+k''.
std::optional<int> delta_star(const Graph& g, const ParamTriple& p);

struct LowerBound {
  Rational raw;  // exact formula value
  int value = 0; // max(0, ceil(raw))
  // Set when δ* does not exist: every outsider would need k'+k'' neighbors,
  // so S = V and the bound is n.
  bool delta_star_absent = false;
};

/// ((k'+δ*)n - 2m) / (δ*+k'-k), for δ >= k and a positive denominator.
std::optional<LowerBound> lower_bound_general(const Graph& g, const ParamTriple& p);

/// k'n / (Δ+k'-k), for k'' = 0, δ >= k and a positive denominator (0 when k' = 0).
std::optional<LowerBound> lower_bound_kp_zero(const Graph& g, const ParamTriple& p);

/// Earlier literature bounds the two lower bounds above improve upon.
enum class PriorBound {
  eq3,              // (1,1,1), no isolated vertex: 3n/2 - m
  eq4,              // (0,1,1): n - 2m/3
  eq5_tree,         // (1,1,1), tree with n >= 2: (n+2)/2
  eq6_tree,         // (0,1,1), tree: (n+2)/3
  eq7,              // (k,k,k), k >= 1, δ >= k: 3n/2 - m/k
  eq8,              // (1,2,1), no isolated vertex: (5n-2m)/4
  hh_tuple,         // (k-1,k,0), δ >= k-1: (2kn-2m)/(k+1)
  zwx_tuple_total,  // (k,k,0), k >= 1, δ >= k: 2(n - m/k)
  fj2_kdom,         // (0,k,0), k >= 1: n - m/k
  hk_zwx_ratio,     // (k,k,0), k >= 1, δ >= k: kn/Δ
  hh_ratio,         // (k-1,k,0), δ >= k-1: kn/(Δ+1)
  fj1_ratio,        // (0,k,0), k >= 1: kn/(Δ+k)
};

inline constexpr PriorBound kAllPriorBounds[] = {
    PriorBound::eq3,      PriorBound::eq4,          PriorBound::eq5_tree,
    PriorBound::eq6_tree, PriorBound::eq7,          PriorBound::eq8,
    PriorBound::hh_tuple, PriorBound::zwx_tuple_total, PriorBound::fj2_kdom,
    PriorBound::hk_zwx_ratio, PriorBound::hh_ratio, PriorBound::fj1_ratio,
};

std::string_view to_string(PriorBound b);
/// Ratio bounds are improved by lower_bound_kp_zero, the rest by lower_bound_general.
bool is_ratio_bound(PriorBound b);

struct PriorValue {
  Rational raw;
  int value = 0;  // max(0, ceil(raw))
};

/// Every prior bound, present iff its parameter pattern and graph hypothesis hold.
std::map<PriorBound, std::optional<PriorValue>> prior_bounds(const Graph& g, const ParamTriple& p);

struct BoundReport {
  ParamTriple triple;
  int n = 0;
  int m = 0;
  int min_degree = 0;
  int max_degree = 0;
  std::optional<int> delta_star;
  std::optional<LowerBound> lb_general;
  std::optional<LowerBound> lb_kp_zero;
  std::map<PriorBound, std::optional<PriorValue>> prior;
  std::optional<int> ub_construct;
  std::map<std::string, bool> applicability;

  /// Largest applicable lower bound value.
  std::optional<int> best_lower() const;
};

/// Throws GraphError for the empty graph.
BoundReport bound_report(const Graph& g, const ParamTriple& p);

struct DominanceCheck {
  PriorBound prior;
  std::optional<Rational> improved;  // absent if our bound is inapplicable where the prior applies
  Rational prior_raw;
  bool ok = false;
};

/// One check per applicable prior bound, compared on exact rationals.
std::vector<DominanceCheck> dominance_checks(const BoundReport& report);

}  // namespace domset
