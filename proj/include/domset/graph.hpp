#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "domset/vertex_set.hpp"

namespace domset {

/// Raised for malformed graph input: bad endpoints, self-loops, empty-graph queries.
class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable finite simple undirected graph on vertices 0..n-1.
///
/// Holds both neighbor lists (sorted ascending) and bitset rows, plus cached
/// degrees and the canonical edge list where each edge is stored as (min, max)
/// and the list is sorted lexicographically.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate pairs, in either orientation,
  /// collapse to one edge. Throws GraphError naming the pair for an
  /// out-of-range endpoint or a self-loop.
  static Graph build(int n, std::span<const Edge> edges);
  static Graph build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }
  const VertexSet& adjacency(Vertex v) const { return rows_[v]; }
  VertexSet closed_neighborhood(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }

  int degree(Vertex v) const { return degrees_[v]; }
  std::span<const int> degrees() const { return degrees_; }

  /// δ(G); throws GraphError when n = 0.
  int min_degree() const;
  /// Δ(G); throws GraphError when n = 0.
  int max_degree() const;

  bool is_connected() const;
  bool has_isolated_vertex() const;
  /// Connected with m = n - 1.
  bool is_tree() const;
  bool is_regular(int d) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<VertexSet> rows_;
  std::vector<int> degrees_;
  int min_degree_ = 0;
  int max_degree_ = 0;
};

}  // namespace domset
