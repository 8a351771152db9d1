#include "domset/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <utility>

namespace domset {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 9> kFamilyNames{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::star, "star"},
    {Family::petersen, "petersen"},
    {Family::random_gnp, "random_gnp"},
    {Family::random_regular, "random_regular"},
    {Family::random_tree, "random_tree"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

Graph complement_of(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.push_back({u, v});
  return Graph::build(n, edges);
}

// One pass of the pairing process. Returns false when it gets stuck.
bool try_pairing(int n, int d, std::mt19937_64& rng, std::vector<Edge>& edges) {
  std::vector<Vertex> points;
  points.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
  for (Vertex v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i) points.push_back(v);

  std::vector<VertexSet> adj(static_cast<std::size_t>(n), VertexSet(n));
  edges.clear();

  auto usable = [&](std::size_t i, std::size_t j) {
    const Vertex a = points[i], b = points[j];
    return a != b && !adj[a].contains(b);
  };

  while (!points.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
    std::optional<std::pair<std::size_t, std::size_t>> chosen;
    for (int attempt = 0; attempt < 64 && !chosen; ++attempt) {
      const std::size_t i = pick(rng), j = pick(rng);
      if (i != j && usable(i, j)) chosen = {i, j};
    }
    if (!chosen) {
      std::vector<std::pair<std::size_t, std::size_t>> options;
      for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
          if (usable(i, j)) options.emplace_back(i, j);
      if (options.empty()) return false;
      chosen = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    }
    auto [i, j] = *chosen;
    const Vertex a = points[i], b = points[j];
    adj[a].insert(b);
    adj[b].insert(a);
    edges.push_back({a, b});
    if (i < j) std::swap(i, j);
    points[i] = points.back();
    points.pop_back();
    points[j] = points.back();
    points.pop_back();
  }
  return true;
}

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& [family, name] : kFamilyNames)
    if (family == f) return name;
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [family, known] : kFamilyNames)
    if (known == name) return family;
  throw GraphError("unknown graph family '" + std::string(name) + "'");
}

bool is_random(Family f) {
  return f == Family::random_gnp || f == Family::random_regular || f == Family::random_tree;
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::build(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph::build(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::build(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite needs both parts >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.push_back({u, a + v});
  return Graph::build(a + b, edges);
}

Graph star_graph(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::build(leaves + 1, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph::build(10, edges);
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  require(n >= 1, "random_gnp needs n >= 1");
  require(p >= 0.0 && p <= 1.0, "random_gnp needs 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph::build(n, edges);
}

Graph random_regular(int n, int d, std::uint64_t seed) {
  require(n >= 1, "random_regular needs n >= 1");
  require(d >= 0 && d < n, "random_regular needs 0 <= d < n");
  require((static_cast<long long>(n) * d) % 2 == 0, "random_regular needs n*d even");
  if (2 * d > n - 1) return complement_of(random_regular(n, n - 1 - d, seed));

  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int attempt = 0; attempt < 10000; ++attempt)
    if (try_pairing(n, d, rng, edges)) return Graph::build(n, edges);
  throw GraphError("random_regular: pairing process failed repeatedly");
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "random_tree needs n >= 1");
  if (n == 1) return Graph::build(1, {});
  if (n == 2) return Graph::build(2, {{0, 1}});

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Vertex> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = pick(rng);

  std::vector<int> remaining(static_cast<std::size_t>(n), 1);
  for (Vertex c : code) ++remaining[c];
  std::vector<Edge> edges;
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (remaining[leaf] != 1) ++leaf;
    edges.push_back({leaf, c});
    --remaining[leaf];
    --remaining[c];
  }
  Vertex a = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (remaining[v] != 1) continue;
    if (a < 0) {
      a = v;
    } else {
      edges.push_back({a, v});
      break;
    }
  }
  return Graph::build(n, edges);
}

Graph generate(const GraphSpec& spec, std::uint64_t seed) {
  switch (spec.family) {
    case Family::path: return path_graph(spec.n);
    case Family::cycle: return cycle_graph(spec.n);
    case Family::complete: return complete_graph(spec.n);
    case Family::complete_bipartite: return complete_bipartite_graph(spec.n, spec.second);
    case Family::star: return star_graph(spec.n);
    case Family::petersen: return petersen_graph();
    case Family::random_gnp: return random_gnp(spec.n, spec.probability, seed);
    case Family::random_regular: return random_regular(spec.n, spec.second, seed);
    case Family::random_tree: return random_tree(spec.n, seed);
  }
  throw GraphError("unknown graph family");
}

}  // namespace domset
