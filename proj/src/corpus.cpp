#include "circpart/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "circpart/canonical.hpp"
#include "circpart/error.hpp"

namespace circpart {

namespace {

// Multiplicity matrix graphs grown by cycles; `directed` selects arcs or
// undirected edges. Each cycle is a vertex sequence closed back to its start.
struct CycleGrowth {
  bool directed;
  int max_edges;
  std::map<std::string, std::pair<int, std::vector<std::pair<int, int>>>> found;  // key -> (n, edge list)

  std::string key(int n, const std::vector<std::pair<int, int>>& edges) const {
    std::vector<int> m(static_cast<std::size_t>(n * n), 0);
    for (auto [a, b] : edges) {
      ++m[static_cast<std::size_t>(a * n + b)];
      if (!directed) ++m[static_cast<std::size_t>(b * n + a)];
    }
    return canonical_form(n, m);
  }

  void add(int n, std::vector<std::pair<int, int>> edges, std::vector<std::string>& frontier) {
    std::string k = key(n, edges);
    if (found.emplace(k, std::make_pair(n, std::move(edges))).second) frontier.push_back(k);
  }

  void run() {
    std::vector<std::string> frontier;
    for (int len = 2; len <= max_edges; ++len) {
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
      add(len, std::move(edges), frontier);
    }
    while (!frontier.empty()) {
      std::vector<std::string> next;
      for (const std::string& k : frontier) {
        const auto [n, edges] = found.at(k);
        const int room = max_edges - static_cast<int>(edges.size());
        for (int len = 2; len <= room; ++len) extend(n, edges, len, next);
      }
      frontier = std::move(next);
    }
  }

  // Attach every cycle of the given length that starts at an existing vertex;
  // fresh vertices are numbered in order of first use.
  void extend(int n, const std::vector<std::pair<int, int>>& edges, int len, std::vector<std::string>& next) {
    std::vector<int> seq;
    std::function<void(int, EdgeMask)> rec = [&](int fresh, EdgeMask used) {
      if (static_cast<int>(seq.size()) == len) {
        auto grown = edges;
        for (int i = 0; i < len; ++i) grown.emplace_back(seq[static_cast<std::size_t>(i)], seq[static_cast<std::size_t>((i + 1) % len)]);
        add(fresh, std::move(grown), next);
        return;
      }
      for (int v = 0; v < n; ++v) {
        if ((used >> v) & 1U) continue;
        seq.push_back(v);
        rec(fresh, used | bit(v));
        seq.pop_back();
      }
      seq.push_back(fresh);
      rec(fresh + 1, used | bit(fresh));
      seq.pop_back();
    };
    for (int start = 0; start < n; ++start) {
      seq.assign(1, start);
      rec(n, bit(start));
    }
  }
};

}  // namespace

std::vector<Digraph> eulerian_digraph_corpus(int max_edges) {
  if (max_edges > 10) throw SizeError("Eulerian digraph corpus is capped at 10 arcs");
  CycleGrowth g{true, max_edges, {}};
  g.run();
  std::vector<std::pair<std::pair<int, int>, Digraph>> keyed;
  for (const auto& [k, v] : g.found) {
    std::vector<Arc> arcs;
    for (auto [a, b] : v.second) arcs.push_back({a, b});
    keyed.push_back({{static_cast<int>(arcs.size()), v.first}, Digraph(v.first, std::move(arcs))});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Digraph> out;
  for (auto& [k, d] : keyed) out.push_back(std::move(d));
  return out;
}

std::vector<Multigraph> veblen_corpus(int max_edges) {
  if (max_edges > 10) throw SizeError("Veblen corpus is capped at 10 edges");
  CycleGrowth g{false, max_edges, {}};
  g.run();
  std::vector<std::pair<std::pair<int, int>, Multigraph>> keyed;
  for (const auto& [k, v] : g.found) {
    std::vector<Ends> es;
    for (auto [a, b] : v.second) es.push_back({std::min(a, b), std::max(a, b)});
    keyed.push_back({{static_cast<int>(es.size()), v.first}, Multigraph(v.first, std::move(es))});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Multigraph> out;
  for (auto& [k, x] : keyed) out.push_back(std::move(x));
  return out;
}

std::vector<SimpleGraph> connected_graph_corpus(int max_vertices) {
  if (max_vertices > 6) throw SizeError("simple graph corpus is capped at 6 vertices");
  std::vector<SimpleGraph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<Ends> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::map<std::string, SimpleGraph> seen;
    for (EdgeMask m = 0; m < bit(static_cast<int>(pairs.size())); ++m) {
      std::vector<Ends> es;
      for_each_bit(m, [&](int i) { es.push_back(pairs[static_cast<std::size_t>(i)]); });
      SimpleGraph g(n, std::move(es));
      if (!g.is_connected()) continue;
      seen.try_emplace(canonical_form(g), g);
    }
    std::vector<SimpleGraph> level;
    for (auto& [k, g] : seen) level.push_back(std::move(g));
    std::stable_sort(level.begin(), level.end(), [](const SimpleGraph& a, const SimpleGraph& b) { return a.num_edges() < b.num_edges(); });
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

SimpleGraph complete_graph(int n) {
  std::vector<Ends> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({u, v});
  return SimpleGraph(n, std::move(es));
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycles need at least 3 vertices");
  std::vector<Ends> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return SimpleGraph(n, std::move(es));
}

SimpleGraph path_graph(int n) {
  std::vector<Ends> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return SimpleGraph(n, std::move(es));
}

SimpleGraph star_graph(int n) {
  std::vector<Ends> es;
  for (int i = 1; i < n; ++i) es.push_back({0, i});
  return SimpleGraph(n, std::move(es));
}

SimpleGraph wheel_graph(int n) {
  if (n < 4) throw PreconditionError("wheels need at least 4 vertices");
  std::vector<Ends> es;
  for (int i = 1; i < n; ++i) {
    es.push_back({0, i});
    es.push_back({i, i + 1 < n ? i + 1 : 1});
  }
  return SimpleGraph(n, std::move(es));
}

SimpleGraph complete_bipartite_graph(int a, int b) {
  std::vector<Ends> es;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) es.push_back({u, v});
  return SimpleGraph(a + b, std::move(es));
}

std::vector<SimpleGraph> random_connected_graphs(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SimpleGraph> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Ends> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1U) es.push_back({u, v});
    SimpleGraph g(n, std::move(es));
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::pair<std::string, SimpleGraph>> spot_graphs(int n, int random_count, std::uint64_t seed) {
  std::vector<std::pair<std::string, SimpleGraph>> out{
      {"complete", complete_graph(n)}, {"cycle", cycle_graph(n)},  {"path", path_graph(n)},
      {"star", star_graph(n)},         {"wheel", wheel_graph(n)}, {"complete-bipartite", complete_bipartite_graph(n / 2, n - n / 2)},
  };
  int i = 0;
  for (SimpleGraph& g : random_connected_graphs(n, random_count, seed)) out.emplace_back("random-" + std::to_string(i++), std::move(g));
  return out;
}

}  // namespace circpart
