#include "domset/params.hpp"

#include <array>
#include <charconv>
#include <utility>

namespace domset {

namespace {

constexpr std::array<std::pair<Specialization, std::string_view>, 7> kNames{{
    {Specialization::restrained, "restrained"},
    {Specialization::total_restrained, "total_restrained"},
    {Specialization::restrained_double, "restrained_double"},
    {Specialization::k_tuple_total_restrained, "k_tuple_total_restrained"},
    {Specialization::k_tuple_total, "k_tuple_total"},
    {Specialization::k_tuple, "k_tuple"},
    {Specialization::k_domination, "k_domination"},
}};

int parse_int(std::string_view token, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
    throw std::invalid_argument("malformed triple '" + std::string(whole) + "'");
  return value;
}

void check_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count())
    throw std::invalid_argument("vertex set universe " + std::to_string(s.universe()) +
                                " does not match graph order " + std::to_string(g.vertex_count()));
}

}  // namespace

ParamTriple::ParamTriple(int k, int kp, int kpp) : k_(k), kp_(kp), kpp_(kpp) {
  if (k < 0 || kp < 0 || kpp < 0)
    throw std::invalid_argument("triple entries must be non-negative, got " + to_string());
}

std::string ParamTriple::to_string() const {
  return std::to_string(k_) + "," + std::to_string(kp_) + "," + std::to_string(kpp_);
}

std::string_view to_string(Specialization s) {
  for (const auto& [spec, name] : kNames)
    if (spec == s) return name;
  return "unknown";
}

std::optional<Specialization> parse_specialization(std::string_view name) {
  for (const auto& [spec, known] : kNames)
    if (known == name) return spec;
  return std::nullopt;
}

bool takes_k(Specialization s) {
  return s == Specialization::k_tuple_total_restrained || s == Specialization::k_tuple_total ||
         s == Specialization::k_tuple || s == Specialization::k_domination;
}

NamedParameter named(Specialization s, std::optional<int> k) {
  if (takes_k(s) && !k)
    throw std::invalid_argument(std::string(to_string(s)) + " needs a value of k");
  if (!takes_k(s) && k)
    throw std::invalid_argument(std::string(to_string(s)) + " takes no k");
  switch (s) {
    case Specialization::restrained: return {s, k, ParamTriple(0, 1, 1)};
    case Specialization::total_restrained: return {s, k, ParamTriple(1, 1, 1)};
    case Specialization::restrained_double: return {s, k, ParamTriple(1, 2, 1)};
    case Specialization::k_tuple_total_restrained: return {s, k, ParamTriple(*k, *k, *k)};
    case Specialization::k_tuple_total: return {s, k, ParamTriple(*k, *k, 0)};
    case Specialization::k_tuple:
      if (*k < 1) throw std::invalid_argument("k_tuple needs k >= 1");
      return {s, k, ParamTriple(*k - 1, *k, 0)};
    case Specialization::k_domination: return {s, k, ParamTriple(0, *k, 0)};
  }
  throw std::invalid_argument("unknown specialization");
}

ParamTriple named(std::string_view name, std::optional<int> k) {
  const auto spec = parse_specialization(name);
  if (!spec) throw std::invalid_argument("unknown parameter name '" + std::string(name) + "'");
  return named(*spec, k).triple;
}

std::vector<NamedParameter> specializations_of(const ParamTriple& p) {
  std::vector<NamedParameter> out;
  for (const auto& [spec, name] : kNames) {
    std::optional<int> k;
    if (takes_k(spec)) {
      // Recover the k each family would need, then check the round trip.
      const bool indexed_by_kp = spec == Specialization::k_tuple || spec == Specialization::k_domination;
      k = indexed_by_kp ? p.kp() : p.k();
      if (spec == Specialization::k_tuple && *k < 1) continue;
    }
    const NamedParameter candidate = named(spec, k);
    if (candidate.triple == p) out.push_back(candidate);
  }
  return out;
}

ParamTriple parse_triple(std::string_view text) {
  if (text.find(',') != std::string_view::npos) {
    const std::size_t a = text.find(',');
    const std::size_t b = text.find(',', a + 1);
    if (b == std::string_view::npos || text.find(',', b + 1) != std::string_view::npos)
      throw std::invalid_argument("malformed triple '" + std::string(text) + "', expected k,k',k''");
    return ParamTriple(parse_int(text.substr(0, a), text), parse_int(text.substr(a + 1, b - a - 1), text),
                       parse_int(text.substr(b + 1), text));
  }
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) return named(text);
  return named(text.substr(0, colon), parse_int(text.substr(colon + 1), text));
}

bool is_dominating(const Graph& g, const VertexSet& s, const ParamTriple& p) {
  check_universe(g, s);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int inside = g.adjacency(v).count_common(s);
    if (s.contains(v)) {
      if (inside < p.k()) return false;
    } else if (inside < p.kp() || g.degree(v) - inside < p.kpp()) {
      return false;
    }
  }
  return true;
}

std::string_view describe(Condition c) {
  switch (c) {
    case Condition::member_in_neighbors: return "k in-S neighbors";
    case Condition::outsider_in_neighbors: return "k' in-S neighbors";
    case Condition::outsider_out_neighbors: return "k'' out-of-S neighbors";
  }
  return "unknown";
}

std::vector<Violation> violation_report(const Graph& g, const VertexSet& s, const ParamTriple& p) {
  check_universe(g, s);
  std::vector<Violation> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int inside = g.adjacency(v).count_common(s);
    const int outside = g.degree(v) - inside;
    if (s.contains(v)) {
      if (inside < p.k()) out.push_back({v, Condition::member_in_neighbors, inside, p.k()});
      continue;
    }
    if (inside < p.kp()) out.push_back({v, Condition::outsider_in_neighbors, inside, p.kp()});
    if (outside < p.kpp()) out.push_back({v, Condition::outsider_out_neighbors, outside, p.kpp()});
  }
  return out;
}

bool trivial_feasible(const Graph& g, const ParamTriple& p) {
  return g.vertex_count() == 0 || g.min_degree() >= p.k();
}

}  // namespace domset
