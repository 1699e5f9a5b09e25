#include "circpart/io.hpp"

#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <vector>

#include "circpart/error.hpp"

namespace circpart {

namespace {

int parse_vertex(const std::string& token, int n, int line) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    throw ParseError("vertex '" + token + "' is not an integer", line);
  }
  if (used != token.size()) throw ParseError("vertex '" + token + "' is not an integer", line);
  if (value < 1 || value > n) throw ParseError("vertex " + token + " outside 1.." + std::to_string(n), line);
  return static_cast<int>(value - 1);
}

}  // namespace

ParsedGraph parse_graph(std::istream& in) {
  std::string raw;
  int line = 0;
  bool have_header = false, directed = false;
  int n = 0;
  std::vector<std::pair<int, int>> ends;
  LabelTable labels;
  std::set<std::string> ids;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!have_header) {
      if (tok.size() != 2 || (tok[0] != "digraph" && tok[0] != "multigraph"))
        throw ParseError("expected header 'digraph n' or 'multigraph n'", line);
      directed = tok[0] == "digraph";
      try {
        std::size_t used = 0;
        n = std::stoi(tok[1], &used);
        if (used != tok[1].size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw ParseError("vertex count '" + tok[1] + "' is not an integer", line);
      }
      if (n < 0 || n > 64) throw ParseError("vertex count must lie in 0..64", line);
      have_header = true;
      continue;
    }
    if (tok.size() != 3) throw ParseError("expected 'edge-id endpoint endpoint'", line);
    if (!ids.insert(tok[0]).second) throw ParseError("duplicate edge id '" + tok[0] + "'", line);
    int a = parse_vertex(tok[1], n, line), b = parse_vertex(tok[2], n, line);
    if (a == b) throw ParseError("edge '" + tok[0] + "' is a loop", line);
    if (ends.size() == static_cast<std::size_t>(kMaxEdges)) throw ParseError("more than 64 edges", line);
    ends.emplace_back(a, b);
    labels.edges.push_back(tok[0]);
  }
  if (!have_header) throw ParseError("empty input: missing header", line);
  for (int v = 0; v < n; ++v) labels.vertices.push_back(std::to_string(v + 1));
  if (directed) {
    std::vector<Arc> arcs;
    for (auto [a, b] : ends) arcs.push_back({a, b});
    return Digraph(n, std::move(arcs), std::move(labels));
  }
  std::vector<Ends> es;
  for (auto [a, b] : ends) es.push_back({a, b});
  return Multigraph(n, std::move(es), std::move(labels));
}

ParsedGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

std::string format_graph(const Digraph& d) {
  std::ostringstream out;
  out << "digraph " << d.num_vertices() << '\n';
  for (int e = 0; e < d.num_edges(); ++e)
    out << d.edge_label(e) << ' ' << d.vertex_label(d.tail(e)) << ' ' << d.vertex_label(d.head(e)) << '\n';
  return out.str();
}

std::string format_graph(const Multigraph& x) {
  std::ostringstream out;
  out << "multigraph " << x.num_vertices() << '\n';
  for (int e = 0; e < x.num_edges(); ++e)
    out << x.edge_label(e) << ' ' << x.vertex_label(x.ends(e).u) << ' ' << x.vertex_label(x.ends(e).v) << '\n';
  return out.str();
}

}  // namespace circpart
