#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "domset/solver.hpp"

namespace domset {

namespace {

bool satisfies(const std::vector<std::vector<Vertex>>& adj, std::uint32_t mask, const ParamTriple& p) {
  for (std::size_t v = 0; v < adj.size(); ++v) {
    int inside = 0;
    int outside = 0;
    for (Vertex w : adj[v]) ((mask >> w) & 1u) ? ++inside : ++outside;
    if ((mask >> v) & 1u) {
      if (inside < p.k()) return false;
    } else if (inside < p.kp() || outside < p.kpp()) {
      return false;
    }
  }
  return true;
}

}  // namespace

SolveResult brute_force_oracle(const Graph& g, const ParamTriple& p) {
  const int n = g.vertex_count();
  if (n > kOracleMaxVertices)
    throw std::invalid_argument("brute force oracle limited to " + std::to_string(kOracleMaxVertices) +
                                " vertices, got " + std::to_string(n));
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());

  SolveResult result;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (int size = 0; size <= n; ++size) {
    // Gosper's hack walks all masks with exactly `size` bits set.
    std::uint32_t mask = size == 0 ? 0u : (std::uint32_t{1} << size) - 1;
    while (mask < limit) {
      ++result.nodes_explored;
      if (satisfies(adj, mask, p)) {
        VertexSet s(n);
        for (Vertex v = 0; v < n; ++v)
          if ((mask >> v) & 1u) s.insert(v);
        result.status = SolveStatus::optimal;
        result.gamma = size;
        result.witness = std::move(s);
        result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);
        return result;
      }
      if (mask == 0) break;
      const std::uint32_t low = mask & -mask;
      const std::uint32_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  result.status = SolveStatus::infeasible;
  result.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return result;
}

}  // namespace domset
