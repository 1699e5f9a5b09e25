#include "circpart/lattice.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_set>

#include "circpart/error.hpp"
#include "circpart/trails.hpp"

namespace circpart {

namespace {

void require_eulerian(const Digraph& d) {
  if (!is_eulerian(d)) throw PreconditionError("digraph is not connected Eulerian");
}

}  // namespace

std::vector<SetPartition> cycle_partitions(const Digraph& d) {
  for (int v = 0; v < d.num_vertices(); ++v)
    if (d.in_degree(v) != d.out_degree(v)) throw PreconditionError("cycle partitions need in-degree = out-degree everywhere");
  std::vector<SetPartition> out;
  std::vector<EdgeMask> blocks;
  std::function<void(EdgeMask)> rec = [&](EdgeMask uncovered) {
    if (uncovered == 0) {
      out.emplace_back(d.num_edges(), blocks);
      return;
    }
    const int e = lowest_bit(uncovered);
    const int goal = d.tail(e);
    // Simple paths head(e) -> tail(e) over uncovered edges.
    std::function<void(int, EdgeMask, EdgeMask)> path = [&](int v, EdgeMask visited, EdgeMask edges) {
      if (v == goal) {
        blocks.push_back(edges | bit(e));
        rec(uncovered & ~(edges | bit(e)));
        blocks.pop_back();
        return;
      }
      for (int f : d.out_edges(v)) {
        if (!((uncovered >> f) & 1U) || f == e) continue;
        int w = d.head(f);
        if ((visited >> w) & 1U) continue;
        path(w, visited | bit(w), edges | bit(f));
      }
    };
    path(d.head(e), bit(d.head(e)), 0);
  };
  if (d.num_edges() > 0) rec(d.all_edges());
  return out;
}

SimpleGraph intersection_graph(const Digraph& d, const SetPartition& a) {
  std::vector<Ends> edges;
  const auto& b = a.blocks();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (d.vertex_support(b[i]) & d.vertex_support(b[j])) edges.push_back({static_cast<int>(i), static_cast<int>(j)});
  return SimpleGraph(static_cast<int>(b.size()), std::move(edges));
}

int EulerianSemilattice::index_of(const SetPartition& b) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), b, [](const SetPartition& x, const SetPartition& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  if (it == elements.end() || *it != b) throw PreconditionError("partition is not an element of the semilattice");
  return static_cast<int>(it - elements.begin());
}

std::int64_t partition_weight(const Digraph& d, const SetPartition& b) {
  if (b.ground_size() != d.num_edges()) throw PreconditionError("partition ground set differs from the edge set");
  std::int64_t w = b.size() % 2 ? -1 : 1;
  for (EdgeMask blk : b.blocks()) {
    if (!is_eulerian(d, blk)) return 0;
    w = checked_mul(w, count_circuits_best(d, blk));
  }
  return w;
}

EulerianSemilattice build_eulerian_semilattice(const Digraph& d) {
  require_eulerian(d);
  std::unordered_set<SetPartition, SetPartitionHash> seen;
  const auto q = cycle_partitions(d);
  for (const SetPartition& a : q) {
    SimpleGraph ga = intersection_graph(d, a);
    for (const SetPartition& x : connected_partitions(ga)) {
      std::vector<EdgeMask> blocks;
      for (EdgeMask piece_block : x.blocks()) {
        EdgeMask edges = 0;
        for_each_bit(piece_block, [&](int piece) { edges |= a.blocks()[static_cast<std::size_t>(piece)]; });
        blocks.push_back(edges);
      }
      seen.emplace(d.num_edges(), std::move(blocks));
      if (seen.size() > static_cast<std::size_t>(FinitePoset::kMaxElements))
        throw SizeError("semilattice exceeds 2^15 elements");
    }
  }
  EulerianSemilattice t;
  t.elements.assign(seen.begin(), seen.end());
  std::sort(t.elements.begin(), t.elements.end(), [](const SetPartition& x, const SetPartition& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  t.order = FinitePoset(static_cast<int>(t.elements.size()), [&](int a, int b) {
    return t.elements[static_cast<std::size_t>(a)].refines(t.elements[static_cast<std::size_t>(b)]);
  });
  t.top = t.index_of(SetPartition::single_block(d.num_edges()));
  for (const SetPartition& a : q) t.minimal.push_back(t.index_of(a));
  std::sort(t.minimal.begin(), t.minimal.end());
  for (const SetPartition& b : t.elements) t.weights.push_back(partition_weight(d, b));
  return t;
}

std::int64_t cumulative_weight(const EulerianSemilattice& t, const SetPartition& b) {
  std::int64_t s = 0;
  for (int a : t.order.down_set(t.index_of(b))) s = checked_add(s, t.weights[static_cast<std::size_t>(a)]);
  return s;
}

std::vector<std::int64_t> circuit_partition_counts(const EulerianSemilattice& t) {
  std::size_t kmax = 0;
  for (const auto& b : t.elements) kmax = std::max(kmax, b.size());
  std::vector<std::int64_t> f(kmax, 0);
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    std::size_t k = t.elements[i].size();
    std::int64_t unsigned_weight = k % 2 ? -t.weights[i] : t.weights[i];
    f[k - 1] = checked_add(f[k - 1], unsigned_weight);
  }
  return f;
}

std::vector<std::int64_t> circuit_partition_counts(const Digraph& d) {
  return circuit_partition_counts(build_eulerian_semilattice(d));
}

MartinPolynomials martin_polynomial(const EulerianSemilattice& t) {
  MartinPolynomials m;
  m.f = circuit_partition_counts(t);
  const IntPolynomial shift = IntPolynomial::linear(-1, 1);
  IntPolynomial power = IntPolynomial::constant(1);
  for (std::size_t k = 0; k < m.f.size(); ++k) {
    m.s += IntPolynomial::constant(m.f[k]) * power;
    m.r += IntPolynomial::monomial(m.f[k], static_cast<int>(k) + 1);
    power = power * shift;
  }
  return m;
}

MartinPolynomials martin_polynomial(const Digraph& d) { return martin_polynomial(build_eulerian_semilattice(d)); }

CancellationReport verify_cancellation(const Digraph& d) {
  auto f = circuit_partition_counts(d);
  CancellationReport r;
  for (std::size_t k = 0; k < f.size(); ++k) r.alternating_sum += (k % 2 ? 1 : -1) * f[k];
  r.single_cycle = is_directed_cycle(d, d.all_edges());
  r.holds = r.alternating_sum == (r.single_cycle ? -1 : 0);
  return r;
}

IdentityReport martin_chromatic_identity(const Digraph& d) {
  require_eulerian(d);
  IdentityReport r;
  const MartinPolynomials m = martin_polynomial(d);
  r.lhs = m.s.compose(IntPolynomial::linear(1, -1));
  r.r_at_minus_t = m.r.compose(IntPolynomial::linear(0, -1));
  bool all_chromatic = true;
  for (const SetPartition& a : cycle_partitions(d)) {
    IdentityTerm term{a, intersection_graph(d, a), {}, {}, false};
    term.characteristic = characteristic_polynomial(build_bond_lattice(term.graph));
    term.chromatic = chromatic_polynomial(term.graph);
    term.chromatic_matches = IntPolynomial::linear(0, 1) * term.characteristic == term.chromatic;
    all_chromatic = all_chromatic && term.chromatic_matches;
    const IntPolynomial sign = IntPolynomial::constant(a.size() % 2 ? -1 : 1);
    r.rhs -= sign * term.characteristic;
    r.chromatic_sum += sign * term.chromatic;
    r.terms.push_back(std::move(term));
  }
  r.holds = all_chromatic && r.lhs == r.rhs && r.r_at_minus_t == r.chromatic_sum;
  return r;
}

DivisibilityReport las_vergnas_divisibility(const Digraph& d) {
  require_eulerian(d);
  DivisibilityReport r;
  for (int v = 0; v < d.num_vertices(); ++v) r.max_out_degree = std::max(r.max_out_degree, d.out_degree(v));
  if (r.max_out_degree < 2) throw PreconditionError("divisibility check needs maximum out-degree at least 2");
  r.s = martin_polynomial(d).s;
  r.divisor = IntPolynomial::constant(1);
  r.quotient = r.s;
  r.divisible = true;
  for (int i = 0; i <= r.max_out_degree - 2; ++i) {
    r.divisor = r.divisor * IntPolynomial::linear(i, 1);
    auto [q, rem] = r.quotient.divide_linear(-i);
    if (rem != 0) r.divisible = false;
    r.quotient = q;
  }
  if (!r.divisible) r.quotient = IntPolynomial();
  return r;
}

}  // namespace circpart
