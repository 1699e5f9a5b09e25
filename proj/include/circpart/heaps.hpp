#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "circpart/graph.hpp"

namespace circpart {

// A piece system is a simple graph on the pieces: distinct pieces are
// concurrent iff adjacent, and every piece is concurrent with itself.
using PieceSystem = SimpleGraph;

inline bool concurrent(const PieceSystem& ps, int a, int b) { return a == b || ps.adjacent(a, b); }

// Labeled poset with at most 64 elements, stored by its reflexive-transitive
// closure. Elements are kept sorted by id.
class Heap {
 public:
  Heap() = default;
  // le lists generating pairs (i, j) meaning element i <= element j, by
  // position in ids. Throws if the closure is not antisymmetric.
  Heap(std::vector<int> ids, std::vector<int> labels, const std::vector<std::pair<int, int>>& le);

  static Heap singleton(int id, int label);

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  int id(int i) const { return ids_.at(static_cast<std::size_t>(i)); }
  int label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& ids() const { return ids_; }
  const std::vector<int>& labels() const { return labels_; }
  int index_of(int id) const;
  // Bit j set iff element j <= element i.
  EdgeMask down(int i) const { return down_.at(static_cast<std::size_t>(i)); }
  bool leq(int i, int j) const { return (down(j) >> i) & 1U; }
  EdgeMask all() const { return full_mask(size()); }

  std::vector<std::pair<int, int>> covers() const;
  std::vector<int> maximal_elements() const;
  bool is_pyramid() const { return maximal_elements().size() == 1; }
  // Labels are a bijection onto the pieces 0..num_pieces-1.
  bool is_full(int num_pieces) const;
  // Induced sub-heap on the element indices in mask.
  Heap restrict(EdgeMask elements) const;
  // Element index holding the given label, or -1 (first match).
  int index_of_label(int label) const;

  auto operator<=>(const Heap&) const = default;

 private:
  std::vector<int> ids_;
  std::vector<int> labels_;
  std::vector<EdgeMask> down_;
};

struct HeapCheck {
  bool ok = true;
  std::string witness;
};

// Axiom check: concurrent labels force comparability, covers join concurrent labels.
HeapCheck is_heap(const Heap& h, const PieceSystem& ps);
// Equivalent check: Hasse graph maps into the concurrence relation, and the
// incomparability graph maps into non-concurrence.
bool is_heap_sandwich(const Heap& h, const PieceSystem& ps);

// h1 below h2: element x of h1 lies under y of h2 when their labels are concurrent.
Heap compose(const Heap& h1, const Heap& h2, const PieceSystem& ps);
// (down-set of the maximal element w, rest); w is an element index.
std::pair<Heap, Heap> push_down(const Heap& h, int w);

// Full pyramids with apex piece beta, ids = labels = pieces, sorted.
std::vector<Heap> full_pyramids(const PieceSystem& ps, int beta);
// Counts only, for the pieces in S.
std::int64_t count_full_pyramids(const PieceSystem& ps, EdgeMask S, int beta);

struct PyramidRecursionReport {
  std::int64_t lhs = 0;  // |pyramids with apex b2| by orientation enumeration
  std::int64_t rhs = 0;  // sum over connected bipartitions
  int bipartitions = 0;
  bool holds = false;
};
PyramidRecursionReport pyramid_recursion_check(const PieceSystem& ps, int b1, int b2);

// Arc y -> z for each concurrence edge {y,z} with y below z; the apex is the sink.
Digraph pyramid_to_orientation(const Heap& p, const PieceSystem& ps);
// Transitive closure of tail <= head; the sink becomes the apex.
Heap orientation_to_pyramid(const Digraph& o, const PieceSystem& ps);

// Acyclic orientations of ps with the given unique sink, by brute force.
std::vector<Digraph> unique_sink_orientations(const SimpleGraph& g, int x);
std::int64_t count_acyclic_orientations(const SimpleGraph& g);

}  // namespace circpart
