#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domset/graph.hpp"
#include "domset/vertex_set.hpp"

namespace domset {

/// The requirement triple (k, k', k''):
///   every member of S has at least k neighbors in S,
///   every non-member has at least k' neighbors in S and k'' outside S.
class ParamTriple {
public:
  ParamTriple() = default;
  /// Throws std::invalid_argument on a negative entry.
  ParamTriple(int k, int kp, int kpp);

  int k() const { return k_; }
  int kp() const { return kp_; }
  int kpp() const { return kpp_; }

  /// "k,k',k''"
  std::string to_string() const;

  friend auto operator<=>(const ParamTriple&, const ParamTriple&) = default;

private:
  int k_ = 0;
  int kp_ = 0;
  int kpp_ = 0;
};

enum class Specialization {
  restrained,                // (0,1,1)
  total_restrained,          // (1,1,1)
  restrained_double,         // (1,2,1)
  k_tuple_total_restrained,  // (k,k,k)
  k_tuple_total,             // (k,k,0)
  k_tuple,                   // (k-1,k,0), k >= 1
  k_domination,              // (0,k,0)
};

struct NamedParameter {
  Specialization name;
  std::optional<int> k;  // set for the k-indexed families
  ParamTriple triple;
};

std::string_view to_string(Specialization s);
std::optional<Specialization> parse_specialization(std::string_view name);
bool takes_k(Specialization s);

/// Throws std::invalid_argument when `k` is missing for a k-indexed family,
/// given for a fixed one, or k_tuple is asked for with k < 1.
NamedParameter named(Specialization s, std::optional<int> k = std::nullopt);
ParamTriple named(std::string_view name, std::optional<int> k = std::nullopt);

/// All named specializations the triple is an instance of.
std::vector<NamedParameter> specializations_of(const ParamTriple& p);

/// Accepts "k,k',k''" or a specialization name, optionally ":k" suffixed
/// (e.g. "restrained", "k_tuple:3").
ParamTriple parse_triple(std::string_view text);

/// Membership test of S against the triple. Throws std::invalid_argument when
/// the set's universe differs from the graph's vertex count.
bool is_dominating(const Graph& g, const VertexSet& s, const ParamTriple& p);

enum class Condition {
  member_in_neighbors,     // v in S, |N(v) ∩ S| >= k
  outsider_in_neighbors,   // v outside S, |N(v) ∩ S| >= k'
  outsider_out_neighbors,  // v outside S, |N(v) \ S| >= k''
};

std::string_view describe(Condition c);

struct Violation {
  Vertex vertex;
  Condition condition;
  int have;
  int need;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// One entry per violated constraint, ordered by vertex then condition.
std::vector<Violation> violation_report(const Graph& g, const VertexSet& s, const ParamTriple& p);

/// δ(G) >= k: sufficient (S = V works), not necessary.
bool trivial_feasible(const Graph& g, const ParamTriple& p);

}  // namespace domset
