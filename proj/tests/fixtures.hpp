#pragma once

#include <vector>

#include "circpart/graph.hpp"

namespace fixtures {

using circpart::Arc;
using circpart::Digraph;

// The bidirected triangle on 1,2,3 with a 2-cycle hung at 3, ids 0-based.
// Edge order e1 e2 f1 f2 g1 g2 h1 h2.
inline Digraph running_example() {
  circpart::LabelTable labels{{"1", "2", "3", "4"}, {"e1", "e2", "f1", "f2", "g1", "g2", "h1", "h2"}};
  return Digraph(4, {{1, 0}, {0, 1}, {0, 2}, {2, 0}, {2, 1}, {1, 2}, {3, 2}, {2, 3}}, labels);
}

inline Digraph directed_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return Digraph(n, arcs);
}

// Every ordered pair in both directions: the complete symmetric digraph.
inline Digraph complete_symmetric(int n) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) arcs.push_back({u, v});
  return Digraph(n, arcs);
}

}  // namespace fixtures
