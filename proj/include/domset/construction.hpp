#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "domset/graph.hpp"
#include "domset/params.hpp"
#include "domset/vertex_set.hpp"

namespace domset {

/// A construction was requested outside its hypotheses.
class InapplicableError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Witness set S = V \ (N[u] \ {v_1..v_j}) for a (k,k',1)-domination upper bound.
struct Construction {
  int part = 0;                  // 1 or 2
  Vertex center = 0;             // u, a minimum-degree vertex
  std::vector<Vertex> retained;  // v_1..v_j, the neighbors of u kept in S
  VertexSet set;

  int size() const { return set.size(); }
};

/// k'' = 1, k' >= k+1, δ >= k'+1.
bool part1_applies(const Graph& g, const ParamTriple& p);
/// k'' = 1, k >= k', δ >= k+2.
bool part2_applies(const Graph& g, const ParamTriple& p);

/// |S| = n - δ + k' - 1. Throws InapplicableError outside the hypotheses.
Construction construct_part1(const Graph& g, const ParamTriple& p);
/// |S| = n - δ + k. Throws InapplicableError outside the hypotheses.
Construction construct_part2(const Graph& g, const ParamTriple& p);

/// Smaller of the applicable parts (part 1 on ties); empty when neither applies.
std::optional<Construction> best_construction(const Graph& g, const ParamTriple& p);
std::optional<int> upper_bound(const Graph& g, const ParamTriple& p);

}  // namespace domset
