#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "domset/graph.hpp"

namespace domset {

enum class Family {
  path,
  cycle,
  complete,
  complete_bipartite,
  star,
  petersen,
  random_gnp,
  random_regular,
  random_tree,
};

std::string_view to_string(Family f);
/// Throws GraphError for an unknown name.
Family parse_family(std::string_view name);
bool is_random(Family f);

/// Size parameters for one family member.
///
///   path, cycle, complete, random_tree : order = n
///   complete_bipartite                 : parts n and `second`
///   star                               : K_{1,n}, so n is the leaf count
///   petersen                           : no parameters
///   random_gnp                         : order n, edge probability `probability`
///   random_regular                     : order n, degree `second`
struct GraphSpec {
  Family family = Family::path;
  int n = 0;
  int second = 0;
  double probability = 0.5;
};

/// Deterministic in (spec, seed). Throws GraphError for infeasible parameters.
Graph generate(const GraphSpec& spec, std::uint64_t seed = 0);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph star_graph(int leaves);
Graph petersen_graph();
Graph random_gnp(int n, double p, std::uint64_t seed);
/// Uniform-ish d-regular graph by a restarting pairing process; dense degrees
/// are produced as complements of sparse ones.
Graph random_regular(int n, int d, std::uint64_t seed);
/// Uniform labelled tree from a random Prüfer sequence.
Graph random_tree(int n, std::uint64_t seed);

}  // namespace domset
