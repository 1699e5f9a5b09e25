#pragma once

#include <cstdint>
#include <vector>

#include "circpart/graph.hpp"
#include "circpart/set_partition.hpp"

namespace circpart {

// Alternating walk v0 e1 v1 ... ed vd with distinct edges.
struct Trail {
  std::vector<int> vertices;  // length() + 1 entries
  std::vector<int> edges;
  int length() const { return static_cast<int>(edges.size()); }
  bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }
  EdgeMask edge_mask() const;
  EdgeMask vertex_mask() const;
  friend bool operator==(const Trail&, const Trail&) = default;
  friend auto operator<=>(const Trail& a, const Trail& b) {
    if (auto c = a.edges <=> b.edges; c != 0) return c;
    return a.vertices <=> b.vertices;
  }
};

// A closed trail rotated so its edge sequence is lexicographically least.
struct Circuit {
  Trail trail;
  const std::vector<int>& edges() const { return trail.edges; }
  friend bool operator==(const Circuit&, const Circuit&) = default;
  friend auto operator<=>(const Circuit& a, const Circuit& b) { return a.trail <=> b.trail; }
};

// Cycles in extraction order; each is a closed trail starting at the vertex
// where it was cut out of the remaining trail.
struct CycleSeq {
  std::vector<Trail> cycles;
};

// Throws PreconditionError unless w is a trail of d.
void validate_trail(const Digraph& d, const Trail& w);

std::vector<Trail> eulerian_trails_ending_at(const Digraph& d, int e);
// Closed Eulerian trails starting (and ending) at u.
std::vector<Trail> eulerian_trails_from(const Digraph& d, int u);
std::vector<Circuit> eulerian_circuits(const Digraph& d);
// Enumerative count of circuits of the sub-digraph on edges, without storing them.
std::int64_t count_eulerian_circuits(const Digraph& d, EdgeMask edges);

// BEST theorem: in-arborescence count (Matrix-Tree, Bareiss) times
// prod (deg+(v) - 1)!. Throws on non-Eulerian input.
std::int64_t count_circuits_best(const Digraph& d);
std::int64_t count_circuits_best(const Digraph& d, EdgeMask edges);

Circuit canonical_circuit(const Trail& closed);

CycleSeq cycle_sequence(const Trail& w);
// Inverse of cycle_sequence: insert the cycles back, last extracted first.
Trail reassemble(const CycleSeq& cs);
Trail insert_trail(const Trail& inner, const Trail& outer);
SetPartition cycle_partition(const CycleSeq& cs, int num_edges);

// True when the edges form one directed simple cycle.
bool is_directed_cycle(const Digraph& d, EdgeMask edges);
std::vector<Trail> trails_with_cycle_partition(const Digraph& d, int e, const SetPartition& a);

// Rotation classes of undirected closed Eulerian trails, both directions counted.
std::int64_t count_undirected_eulerian_circuits(const Multigraph& x);

}  // namespace circpart
