#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "circpart/graph.hpp"
#include "circpart/heaps.hpp"
#include "circpart/polynomial.hpp"
#include "circpart/poset.hpp"
#include "circpart/set_partition.hpp"

namespace circpart {

// Linear order on edge ids, given from smallest to largest.
class EdgeOrder {
 public:
  EdgeOrder() = default;
  explicit EdgeOrder(std::vector<int> ascending);
  static EdgeOrder identity(int num_edges);
  static EdgeOrder shuffled(int num_edges, std::mt19937_64& rng);

  int size() const { return static_cast<int>(ascending_.size()); }
  const std::vector<int>& ascending() const { return ascending_; }
  int rank(int e) const { return rank_.at(static_cast<std::size_t>(e)); }
  bool less(int a, int b) const { return rank(a) < rank(b); }
  // The largest edge of a nonempty mask.
  int max_edge(EdgeMask edges) const;

 private:
  std::vector<int> ascending_;
  std::vector<int> rank_;
};

// Partitions of the vertex set into blocks inducing connected subgraphs,
// ordered by refinement; rank = n - #blocks.
struct BondLattice {
  SimpleGraph graph;
  std::vector<SetPartition> elements;  // sorted by rank, then blocks
  FinitePoset order;
  std::vector<int> rank;
  int bottom = 0;
  int top = 0;
  int index_of(const SetPartition& x) const;
};

// Vertex partitions whose blocks induce connected subgraphs, unsorted.
std::vector<SetPartition> connected_partitions(const SimpleGraph& g);
BondLattice build_bond_lattice(const SimpleGraph& g);
IntPolynomial characteristic_polynomial(const BondLattice& l);

// Simple cycles of length >= 3 as edge masks (capped at 8 vertices, 16 edges).
std::vector<EdgeMask> graph_cycles(const SimpleGraph& g);
std::vector<EdgeMask> broken_circuits(const SimpleGraph& g, const EdgeOrder& ord);
bool is_nbc(EdgeMask edges, const std::vector<EdgeMask>& broken);
std::vector<EdgeMask> nbc_sets(const SimpleGraph& g, const EdgeOrder& ord);
std::vector<EdgeMask> nbc_bases(const SimpleGraph& g, const EdgeOrder& ord);
// Vertex partition into the components of the spanning subgraph (V, edges).
SetPartition component_partition(const SimpleGraph& g, EdgeMask edges);

struct RotaEntry {
  int element = 0;
  std::int64_t mobius = 0;
  std::int64_t nbc_count = 0;
  bool holds = false;
};
struct RotaReport {
  std::vector<RotaEntry> entries;
  bool all_hold = true;
};
RotaReport rota_check(const BondLattice& l, const EdgeOrder& ord);

// Deletion-contraction with a memo keyed on canonical forms.
IntPolynomial chromatic_polynomial(const SimpleGraph& g);
// Whitney: sum over NBC sets S of (-1)^|S| t^(n-|S|).
IntPolynomial chromatic_polynomial_whitney(const SimpleGraph& g, const EdgeOrder& ord);

struct OrientationCounts {
  std::int64_t acyclic_total = 0;
  std::vector<std::int64_t> unique_sink;  // per vertex
  std::int64_t p_at_minus_one = 0;        // |P_G(-1)|
  std::int64_t linear_coefficient = 0;    // |[t] P_G|
  bool total_matches_p_minus_one = false;
  bool unique_sink_matches_linear = false;
  bool total_matches_linear = false;
  bool unique_sink_matches_p_minus_one = false;
};
OrientationCounts orientation_counts_vs_chromatic(const SimpleGraph& g);

// Throws PreconditionError unless tree is an NBC base of g under ord.
void require_nbc_base(EdgeMask tree, const SimpleGraph& g, const EdgeOrder& ord);

// Root-path comparison construction: arrows point to the endpoint whose
// path edge value is smaller; x is the unique sink.
Digraph mu_explicit(EdgeMask tree, const SimpleGraph& g, int x, const EdgeOrder& ord);
// Recursive split at the largest edge of the induced subgraph.
Heap nbc_to_pyramid(EdgeMask tree, const SimpleGraph& g, int x, const EdgeOrder& ord);
EdgeMask pyramid_to_nbc(const Heap& p, const SimpleGraph& g, const EdgeOrder& ord);
Digraph phi_recursive(EdgeMask tree, const SimpleGraph& g, int x, const EdgeOrder& ord);
EdgeMask psi_recursive(const Digraph& o, const SimpleGraph& g, const EdgeOrder& ord);

}  // namespace circpart
