#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "circpart/graph.hpp"
#include "circpart/polynomial.hpp"
#include "circpart/set_partition.hpp"

namespace circpart {

using Rational = boost::rational<std::int64_t>;

// One orbit of decompositions under permutations of parallel edges.
struct DecompositionClass {
  SetPartition representative;
  std::vector<ApproxClass> block_classes;  // sorted
  std::int64_t labeled_count = 0;          // members found by enumeration
  std::int64_t block_factorials = 0;       // product of M over the blocks
  std::int64_t stabilizer = 0;             // product of n_j! over repeated block classes
  int components = 0;
};

struct DecompositionSummary {
  // Partitions of E(X) into edge sets that each form a connected even-degree multigraph.
  std::vector<SetPartition> labeled;
  std::vector<DecompositionClass> classes;
  bool class_sizes_match = true;  // labeled_count == M_X / (block_factorials * stabilizer)
};

DecompositionSummary decompositions(const Multigraph& x);

// |circuits of X| / M_X, counting circuits of X by running the digraph
// enumerator over all 2^|E| labeled orientations.
Rational associated_coefficient(const Multigraph& x);
// Sum over Eulerian orientation classes of (N/K) * BEST / N.
Rational associated_coefficient_via_rootings(const Multigraph& x);

struct RootingClassSize {
  ApproxClass orientation;
  std::int64_t formula = 0;     // N_D / K_D
  std::int64_t enumerated = 0;  // distinct star sequences
};
// Eulerian orientation classes of X with rooting class sizes by both routes.
std::vector<RootingClassSize> rooting_class_sizes(const Multigraph& x);

// -sum over decomposition classes of (-1)^c C_S / alpha_S, with C_S the
// product of block coefficients. The rank-2 factor (k-1)^n is 1, so n only
// has to be nonnegative.
Rational weight(const Multigraph& x, int n);
// Contribution of an infragraph to the characteristic polynomial coefficient:
// (-1)^c(X) times the product of the weights of its components.
Rational infragraph_term(const Multigraph& x);

// |partitions of O into t Eulerian circuits| through the decompositions of the underlying multigraph.
std::int64_t circuit_partition_of_orientation(const Digraph& o, int t);

// Even-degree multiplicity vectors over the host edges with 1..max_edges
// edges, sorted by (edge count, component count, multiplicities).
std::vector<ApproxClass> enumerate_infragraphs(const SimpleGraph& host, int max_edges);
int component_count(const ApproxClass& x);

IntPolynomial hs_characteristic_polynomial(const SimpleGraph& host);
IntPolynomial elementary_subgraph_formula(const SimpleGraph& host);
IntPolynomial charpoly_determinant_oracle(const SimpleGraph& host);

}  // namespace circpart
