#pragma once

#include <cstdint>
#include <vector>

#include "circpart/bond.hpp"
#include "circpart/graph.hpp"
#include "circpart/polynomial.hpp"
#include "circpart/poset.hpp"
#include "circpart/set_partition.hpp"

namespace circpart {

// Partitions of E(D) into directed cycles, in backtracking order.
std::vector<SetPartition> cycle_partitions(const Digraph& d);
// Pieces are the blocks of a (in block order), adjacent when they share a vertex.
SimpleGraph intersection_graph(const Digraph& d, const SetPartition& a);

// Partitions of E(D) into connected Eulerian parts, ordered by refinement.
struct EulerianSemilattice {
  std::vector<SetPartition> elements;  // coarsest first
  FinitePoset order;
  std::vector<int> minimal;  // the cycle partitions
  int top = 0;
  std::vector<std::int64_t> weights;  // signed circuit products per element
  int index_of(const SetPartition& b) const;
};

EulerianSemilattice build_eulerian_semilattice(const Digraph& d);

// (-1)^|b| times the product of circuit counts of the blocks; 0 when some
// block is not connected Eulerian.
std::int64_t partition_weight(const Digraph& d, const SetPartition& b);
// Sum of partition weights over the down-set of b.
std::int64_t cumulative_weight(const EulerianSemilattice& t, const SetPartition& b);

// f_k for k = 1..max block count; f[0] is the circuit count.
std::vector<std::int64_t> circuit_partition_counts(const Digraph& d);
std::vector<std::int64_t> circuit_partition_counts(const EulerianSemilattice& t);

struct MartinPolynomials {
  std::vector<std::int64_t> f;
  IntPolynomial s;  // sum f_k (t-1)^(k-1)
  IntPolynomial r;  // sum f_k t^k
};
MartinPolynomials martin_polynomial(const Digraph& d);
MartinPolynomials martin_polynomial(const EulerianSemilattice& t);

struct CancellationReport {
  std::int64_t alternating_sum = 0;  // sum (-1)^k f_k
  bool single_cycle = false;
  bool holds = false;
};
CancellationReport verify_cancellation(const Digraph& d);

struct IdentityTerm {
  SetPartition partition;
  SimpleGraph graph;
  IntPolynomial characteristic;
  IntPolynomial chromatic;
  bool chromatic_matches = false;  // t * characteristic == chromatic
};
struct IdentityReport {
  IntPolynomial lhs;  // s(1 - t)
  IntPolynomial rhs;  // -sum (-1)^|a| chi_a(t)
  IntPolynomial r_at_minus_t;
  IntPolynomial chromatic_sum;  // sum (-1)^|a| P_a(t)
  std::vector<IdentityTerm> terms;
  bool holds = false;
};
IdentityReport martin_chromatic_identity(const Digraph& d);

struct DivisibilityReport {
  int max_out_degree = 0;
  IntPolynomial s;
  IntPolynomial divisor;  // t (t+1) ... (t + max_out_degree - 2)
  IntPolynomial quotient;
  bool divisible = false;
};
DivisibilityReport las_vergnas_divisibility(const Digraph& d);

}  // namespace circpart
