#include "circpart/decomposition.hpp"

#include <functional>
#include <string>

#include "circpart/error.hpp"
#include "circpart/lattice.hpp"

namespace circpart {

std::vector<DecompositionPyramid> decomposition_pyramids(const Digraph& d, int e) {
  d.arc(e);
  if (!is_eulerian(d)) throw PreconditionError("decomposition pyramids need a connected Eulerian digraph");
  std::vector<DecompositionPyramid> out;
  for (const SetPartition& a : cycle_partitions(d)) {
    const int apex = a.block_of(e);
    for (Heap& p : full_pyramids(intersection_graph(d, a), apex)) out.push_back({a, apex, std::move(p)});
  }
  return out;
}

Trail cycle_trail(const Digraph& d, EdgeMask block, int start) {
  Trail t;
  t.vertices.push_back(start);
  int v = start;
  do {
    int next = -1;
    for (int f : d.out_edges(v))
      if ((block >> f) & 1U) next = f;
    if (next < 0) throw PreconditionError("block is not a directed cycle through the start vertex");
    t.edges.push_back(next);
    v = d.head(next);
    t.vertices.push_back(v);
  } while (v != start && t.length() <= popcount(block));
  if (v != start || t.edge_mask() != block) throw PreconditionError("block is not a directed cycle");
  return t;
}

DecompositionPyramid trail_to_pyramid(const Digraph& d, const Trail& w) {
  validate_trail(d, w);
  const CycleSeq cs = cycle_sequence(w);
  DecompositionPyramid r{cycle_partition(cs, d.num_edges()), 0, {}};
  const SimpleGraph ga = intersection_graph(d, r.partition);
  bool first = true;
  for (const Trail& c : cs.cycles) {
    const int piece = r.partition.block_of(c.edges.front());
    Heap s = Heap::singleton(piece, piece);
    r.pyramid = first ? s : compose(r.pyramid, s, ga);
    first = false;
  }
  r.apex = r.partition.block_of(w.edges.back());
  return r;
}

std::vector<Trail> pyramid_to_trails(const Digraph& d, int e, const DecompositionPyramid& p) {
  const auto& blocks = p.partition.blocks();
  if (!p.pyramid.is_full(static_cast<int>(blocks.size())) || !p.pyramid.is_pyramid())
    throw PreconditionError("trail reconstruction needs a full pyramid");
  const Heap& h = p.pyramid;
  const int apex = h.maximal_elements().front();
  if (!((blocks[static_cast<std::size_t>(h.label(apex))] >> e) & 1U))
    throw PreconditionError("the apex cycle does not contain the final edge");
  std::vector<Trail> out;
  std::function<void(const Trail&, EdgeMask)> rec = [&](const Trail& cur, EdgeMask remaining) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for_each_bit(remaining, [&](int c) {
      bool maximal = true;
      for_each_bit(remaining, [&](int r) { maximal = maximal && (r == c || !h.leq(c, r)); });
      if (!maximal) return;
      const EdgeMask block = blocks[static_cast<std::size_t>(h.label(c))];
      const EdgeMask verts = d.vertex_support(block);
      std::size_t j = 0;
      EdgeMask prefix = 0;
      while (j < cur.vertices.size() && !((verts >> cur.vertices[j]) & 1U)) {
        if ((prefix >> cur.vertices[j]) & 1U) return;  // prefix is not a path
        prefix |= bit(cur.vertices[j]);
        ++j;
      }
      if (j == cur.vertices.size()) return;
      rec(insert_trail(cycle_trail(d, block, cur.vertices[j]), cur), remaining & ~bit(c));
    });
  };
  const EdgeMask apex_block = blocks[static_cast<std::size_t>(h.label(apex))];
  rec(cycle_trail(d, apex_block, d.head(e)), h.all() & ~bit(apex));
  return out;
}

Trail pyramid_to_trail(const Digraph& d, int e, const DecompositionPyramid& p) {
  auto trails = pyramid_to_trails(d, e, p);
  if (trails.size() != 1)
    throw PreconditionError("pyramid corresponds to " + std::to_string(trails.size()) + " trails, expected exactly one");
  return trails.front();
}

}  // namespace circpart
