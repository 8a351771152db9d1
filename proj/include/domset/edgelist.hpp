#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "domset/graph.hpp"

namespace domset {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Strict reader for the "n m" header + m "u v" lines format. Every line must
/// be newline-terminated. Self-loops, out-of-range endpoints, duplicate edges
/// and count mismatches are errors.
Graph parse_edgelist(std::string_view text);

/// Canonical form: edges as (min, max), sorted lexicographically.
std::string write_edgelist(const Graph& g);

Graph read_edgelist_file(const std::string& path);
void write_edgelist_file(const Graph& g, const std::string& path);

}  // namespace domset
