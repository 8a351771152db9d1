#include "domset/graph.hpp"

#include <algorithm>

namespace domset {

namespace {

std::string pair_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

Graph Graph::build(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count " + std::to_string(n));

  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw GraphError("edge " + pair_text(e) + " has an endpoint outside 0.." + std::to_string(n - 1));
    if (e.u == e.v) throw GraphError("self-loop " + pair_text(e));
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(canon);
  g.neighbors_.assign(static_cast<std::size_t>(n), {});
  g.rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
  for (const Edge& e : g.edges_) {
    g.neighbors_[e.u].push_back(e.v);
    g.neighbors_[e.v].push_back(e.u);
    g.rows_[e.u].insert(e.v);
    g.rows_[e.v].insert(e.u);
  }
  g.degrees_.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    std::sort(g.neighbors_[v].begin(), g.neighbors_[v].end());
    g.degrees_[v] = static_cast<int>(g.neighbors_[v].size());
  }
  if (n > 0) {
    auto [lo, hi] = std::minmax_element(g.degrees_.begin(), g.degrees_.end());
    g.min_degree_ = *lo;
    g.max_degree_ = *hi;
  }
  return g;
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet s = rows_[v];
  s.insert(v);
  return s;
}

int Graph::min_degree() const {
  if (n_ == 0) throw GraphError("minimum degree of the empty graph");
  return min_degree_;
}

int Graph::max_degree() const {
  if (n_ == 0) throw GraphError("maximum degree of the empty graph");
  return max_degree_;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

bool Graph::has_isolated_vertex() const {
  return std::find(degrees_.begin(), degrees_.end(), 0) != degrees_.end();
}

bool Graph::is_tree() const {
  return n_ >= 1 && edge_count() == n_ - 1 && is_connected();
}

bool Graph::is_regular(int d) const {
  return std::all_of(degrees_.begin(), degrees_.end(), [d](int x) { return x == d; });
}

}  // namespace domset
