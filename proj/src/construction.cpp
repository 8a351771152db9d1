#include "domset/construction.hpp"

#include <algorithm>
#include <string>

namespace domset {

namespace {

// Removes N[u] \ {first `keep` neighbors of u} from V, with u the lowest-indexed
// minimum-degree vertex.
Construction build_witness(const Graph& g, int part, int keep, int expected_size) {
  const int delta = g.min_degree();
  const auto degrees = g.degrees();
  const Vertex u = static_cast<Vertex>(std::find(degrees.begin(), degrees.end(), delta) - degrees.begin());

  Construction c;
  c.part = part;
  c.center = u;
  const auto nbrs = g.neighbors(u);
  c.retained.assign(nbrs.begin(), nbrs.begin() + keep);

  VertexSet removed = g.closed_neighborhood(u);
  for (Vertex v : c.retained) removed.erase(v);

  // The removed block must have at least two vertices, all hanging off u, so
  // G[removed] has no isolated vertex.
  if (removed.size() < 2 || !removed.contains(u))
    throw std::logic_error("construction: removed block is smaller than two vertices");
  removed.for_each([&](Vertex v) {
    if (v != u && !g.adjacent(u, v)) throw std::logic_error("construction: removed vertex not adjacent to center");
  });

  c.set = removed.complement();
  if (c.size() != expected_size)
    throw std::logic_error("construction: size " + std::to_string(c.size()) + " differs from formula " +
                           std::to_string(expected_size));
  return c;
}

}  // namespace

bool part1_applies(const Graph& g, const ParamTriple& p) {
  return g.vertex_count() > 0 && p.kpp() == 1 && p.kp() >= p.k() + 1 && g.min_degree() >= p.kp() + 1;
}

bool part2_applies(const Graph& g, const ParamTriple& p) {
  return g.vertex_count() > 0 && p.kpp() == 1 && p.k() >= p.kp() && g.min_degree() >= p.k() + 2;
}

Construction construct_part1(const Graph& g, const ParamTriple& p) {
  if (!part1_applies(g, p))
    throw InapplicableError("part 1 needs k''=1, k'>=k+1 and min degree >= k'+1 (triple " + p.to_string() + ")");
  return build_witness(g, 1, p.kp(), g.vertex_count() - g.min_degree() + p.kp() - 1);
}

Construction construct_part2(const Graph& g, const ParamTriple& p) {
  if (!part2_applies(g, p))
    throw InapplicableError("part 2 needs k''=1, k>=k' and min degree >= k+2 (triple " + p.to_string() + ")");
  return build_witness(g, 2, p.k() + 1, g.vertex_count() - g.min_degree() + p.k());
}

std::optional<Construction> best_construction(const Graph& g, const ParamTriple& p) {
  std::optional<Construction> best;
  if (part1_applies(g, p)) best = construct_part1(g, p);
  if (part2_applies(g, p)) {
    Construction c = construct_part2(g, p);
    if (!best || c.size() < best->size()) best = std::move(c);
  }
  return best;
}

std::optional<int> upper_bound(const Graph& g, const ParamTriple& p) {
  const auto c = best_construction(g, p);
  if (!c) return std::nullopt;
  return c->size();
}

}  // namespace domset
