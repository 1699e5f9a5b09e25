#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "circpart/graph.hpp"

namespace circpart {

// Connected Eulerian digraphs with at most max_edges arcs (parallel arcs
// allowed), one per isomorphism class, grown by attaching directed cycles.
std::vector<Digraph> eulerian_digraph_corpus(int max_edges);
// Connected Veblen multigraphs with at most max_edges edges, one per
// isomorphism class, grown by attaching cycles (length 2 = doubled edge).
std::vector<Multigraph> veblen_corpus(int max_edges);
// Connected simple graphs on 1..max_vertices vertices up to isomorphism.
std::vector<SimpleGraph> connected_graph_corpus(int max_vertices);

SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph star_graph(int n);
// Hub joined to every vertex of a cycle on n - 1 vertices.
SimpleGraph wheel_graph(int n);
SimpleGraph complete_bipartite_graph(int a, int b);
// Connected G(n, 1/2) samples, rejection-sampled from the seed.
std::vector<SimpleGraph> random_connected_graphs(int n, int count, std::uint64_t seed);

// Named families on n vertices plus `random_count` seeded random graphs.
std::vector<std::pair<std::string, SimpleGraph>> spot_graphs(int n, int random_count, std::uint64_t seed);

}  // namespace circpart
