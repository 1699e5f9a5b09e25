#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "circpart/graph.hpp"

namespace circpart {

using ParsedGraph = std::variant<Digraph, Multigraph>;

// Text format: a header `digraph n` or `multigraph n`, then one edge per
// line as `edge-id tail head` (or `edge-id u v`) with vertices numbered
// 1..n. Blank lines and `#` comments are ignored. Errors carry line numbers.
ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph_file(const std::string& path);

std::string format_graph(const Digraph& d);
std::string format_graph(const Multigraph& x);

}  // namespace circpart
