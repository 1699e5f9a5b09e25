#pragma once

#include <vector>

#include "circpart/graph.hpp"
#include "circpart/heaps.hpp"
#include "circpart/set_partition.hpp"
#include "circpart/trails.hpp"

namespace circpart {

// A full pyramid over the intersection graph of a cycle partition, whose
// apex is the cycle containing the chosen edge.
struct DecompositionPyramid {
  SetPartition partition;
  int apex = 0;  // block index in partition
  Heap pyramid;
};

std::vector<DecompositionPyramid> decomposition_pyramids(const Digraph& d, int e);

// The closed trail around the directed cycle `block`, starting at `start`.
Trail cycle_trail(const Digraph& d, EdgeMask block, int start);

// Composes the singleton heaps of the cycle sequence, bottom first. Pieces
// are the blocks of the returned cycle partition.
DecompositionPyramid trail_to_pyramid(const Digraph& d, const Trail& w);
// Every Eulerian trail ending at e whose pyramid is p; reads compatible
// linear extensions of p from the top, inserting each cycle at the first
// vertex it shares with the trail built so far.
std::vector<Trail> pyramid_to_trails(const Digraph& d, int e, const DecompositionPyramid& p);
// Throws unless exactly one trail corresponds to p.
Trail pyramid_to_trail(const Digraph& d, int e, const DecompositionPyramid& p);

}  // namespace circpart
