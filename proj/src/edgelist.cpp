#include "domset/edgelist.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <set>
#include <vector>

namespace domset {

namespace {

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  int line_no = 0;

  bool done() const { return pos >= text.size(); }

  std::string_view next() {
    const std::size_t nl = text.find('\n', pos);
    ++line_no;
    if (nl == std::string_view::npos)
      throw ParseError("line " + std::to_string(line_no) + ": missing trailing newline");
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    return line;
  }
};

unsigned parse_uint(std::string_view token, int line_no) {
  unsigned value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last)
    throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     std::string(token) + "'");
  return value;
}

std::pair<unsigned, unsigned> parse_pair(std::string_view line, int line_no) {
  const std::size_t sp = line.find(' ');
  if (sp == std::string_view::npos)
    throw ParseError("line " + std::to_string(line_no) + ": expected two integers separated by one space");
  return {parse_uint(line.substr(0, sp), line_no), parse_uint(line.substr(sp + 1), line_no)};
}

}  // namespace

Graph parse_edgelist(std::string_view text) {
  LineReader reader{text};
  if (reader.done()) throw ParseError("empty input: missing 'n m' header");
  const auto [n, m] = parse_pair(reader.next(), reader.line_no);
  if (n > 1'000'000) throw ParseError("vertex count too large");

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (unsigned i = 0; i < m; ++i) {
    if (reader.done())
      throw ParseError("header declares " + std::to_string(m) + " edges but only " + std::to_string(i) +
                       " present");
    const int line_no = reader.line_no + 1;
    const auto [u, v] = parse_pair(reader.next(), line_no);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (u >= n || v >= n)
      throw ParseError(where + "endpoint out of range in (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v) throw ParseError(where + "self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
    const Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second)
      throw ParseError(where + "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    edges.push_back(e);
  }
  if (!reader.done())
    throw ParseError("header declares " + std::to_string(m) + " edges but more lines follow");
  return Graph::build(static_cast<int>(n), edges);
}

std::string write_edgelist(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph read_edgelist_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edgelist(buf.str());
}

void write_edgelist_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << write_edgelist(g);
}

}  // namespace domset
