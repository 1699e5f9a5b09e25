#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "circpart/bond.hpp"
#include "circpart/corpus.hpp"
#include "circpart/error.hpp"
#include "circpart/lattice.hpp"
#include "circpart/poset.hpp"
#include "circpart/set_partition.hpp"
#include "circpart/trails.hpp"
#include "fixtures.hpp"

using namespace circpart;

namespace {

// Closed trails that start with the least edge of `edges` and use all of
// them; each circuit is counted once this way.
std::int64_t brute_circuits(const Digraph& d, EdgeMask edges) {
  if (!edges) return 0;
  const int first = lowest_bit(edges);
  const int start = d.tail(first);
  std::int64_t count = 0;
  std::function<void(int, EdgeMask)> walk = [&](int at, EdgeMask left) {
    if (!left) {
      count += at == start;
      return;
    }
    for_each_bit(left, [&](int e) {
      if (d.tail(e) == at) walk(d.head(e), left & ~bit(e));
    });
  };
  walk(d.head(first), edges & ~bit(first));
  return count;
}

// f_k by exact covers of E(D) with circuits, split on the least uncovered edge.
std::vector<std::int64_t> brute_f(const Digraph& d) {
  const int m = d.num_edges();
  std::vector<std::int64_t> circ(bit(m), 0);
  for (EdgeMask s = 1; s < bit(m); ++s) circ[s] = brute_circuits(d, s);
  std::map<std::pair<EdgeMask, int>, std::int64_t> memo;
  std::function<std::int64_t(EdgeMask, int)> covers = [&](EdgeMask left, int k) -> std::int64_t {
    if (!left) return k == 0;
    if (k == 0) return 0;
    auto key = std::make_pair(left, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const EdgeMask low = left & (~left + 1);
    const EdgeMask rest = left & ~low;
    std::int64_t total = 0;
    for (EdgeMask sub = rest;; sub = (sub - 1) & rest) {
      const EdgeMask block = sub | low;
      if (circ[block]) total += circ[block] * covers(left & ~block, k - 1);
      if (!sub) break;
    }
    return memo[key] = total;
  };
  std::vector<std::int64_t> f;
  for (int k = 1; k <= m; ++k) f.push_back(covers(d.all_edges(), k));
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

// Blocks all connected and Eulerian, checked through a brute circuit count.
bool brute_in_t(const Digraph& d, const SetPartition& p) {
  for (EdgeMask b : p.blocks())
    if (brute_circuits(d, b) == 0) return false;
  return true;
}

std::vector<SetPartition> brute_t(const Digraph& d) {
  std::vector<SetPartition> out;
  for (const SetPartition& p : all_set_partitions(d.num_edges()))
    if (brute_in_t(d, p)) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

std::string blocks_string(const Digraph& d, const SetPartition& p) { return p.to_string(d.labels().edges); }

}  // namespace

TEST_CASE("set partitions: counts, join, meet") {
  const std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203, 877};
  for (int n = 0; n < 8; ++n) CHECK(all_set_partitions(n).size() == bell[static_cast<std::size_t>(n)]);

  SetPartition a(4, {0b0011, 0b0100, 0b1000});
  SetPartition b(4, {0b0001, 0b0110, 0b1000});
  CHECK(partition_join(a, b) == SetPartition(4, {0b0111, 0b1000}));
  CHECK(partition_meet(a, b) == SetPartition::discrete(4));
  CHECK(SetPartition::discrete(4).refines(a));
  CHECK(a.refines(SetPartition::single_block(4)));
  CHECK_FALSE(a.refines(b));
  CHECK_THROWS_AS(SetPartition(3, {0b011, 0b110}), PreconditionError);
  CHECK_THROWS_AS(SetPartition(3, {0b011}), PreconditionError);
}

TEST_CASE("join is the least upper bound, meet the greatest lower bound") {
  auto parts = all_set_partitions(5);
  for (const auto& a : parts)
    for (const auto& b : parts) {
      const SetPartition j = partition_join(a, b);
      const SetPartition m = partition_meet(a, b);
      CHECK(a.refines(j));
      CHECK(b.refines(j));
      CHECK(m.refines(a));
      CHECK(m.refines(b));
    }
  // Against the brute upper-bound search on a sample.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& a = parts[rng() % parts.size()];
    const auto& b = parts[rng() % parts.size()];
    const SetPartition j = partition_join(a, b);
    for (const auto& c : parts)
      if (a.refines(c) && b.refines(c)) CHECK(j.refines(c));
  }
}

TEST_CASE("poset: mobius of a chain, a boolean lattice and the partition lattice") {
  FinitePoset chain(5, [](int a, int b) { return a <= b; });
  CHECK(chain.mobius(0, 0) == 1);
  CHECK(chain.mobius(0, 1) == -1);
  CHECK(chain.mobius(0, 3) == 0);
  CHECK(chain.mobius(3, 1) == 0);

  FinitePoset boolean(16, [](int a, int b) { return (a & ~b) == 0; });
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b)
      if ((a & ~b) == 0) CHECK(boolean.mobius(a, b) == (popcount(static_cast<EdgeMask>(b & ~a)) % 2 ? -1 : 1));

  // mu(0, 1) in the partition lattice of [n] is (-1)^(n-1) (n-1)!.
  for (int n = 1; n <= 6; ++n) {
    auto parts = all_set_partitions(n);
    FinitePoset pi(static_cast<int>(parts.size()), [&](int a, int b) {
      return parts[static_cast<std::size_t>(a)].refines(parts[static_cast<std::size_t>(b)]);
    });
    int lo = -1, hi = -1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].size() == static_cast<std::size_t>(n)) lo = static_cast<int>(i);
      if (parts[i].size() == 1) hi = static_cast<int>(i);
    }
    CHECK(pi.mobius(lo, hi) == (n % 2 ? 1 : -1) * factorial(n - 1));
    CHECK(pi.mobius_row(lo)[static_cast<std::size_t>(hi)] == pi.mobius(lo, hi));
  }
}

TEST_CASE("poset: defining recursion of mu on rows and columns") {
  auto parts = all_set_partitions(4);
  FinitePoset pi(static_cast<int>(parts.size()), [&](int a, int b) {
    return parts[static_cast<std::size_t>(a)].refines(parts[static_cast<std::size_t>(b)]);
  });
  for (int a = 0; a < pi.size(); ++a)
    for (int b = 0; b < pi.size(); ++b) {
      if (!pi.leq(a, b)) continue;
      std::int64_t row = 0, col = 0;
      for (int c = 0; c < pi.size(); ++c)
        if (pi.leq(a, c) && pi.leq(c, b)) {
          row += pi.mobius(a, c);
          col += pi.mobius(c, b);
        }
      CHECK(row == (a == b));
      CHECK(col == (a == b));
    }
  const auto& ext = pi.linear_extension();
  std::vector<int> pos(ext.size());
  for (std::size_t i = 0; i < ext.size(); ++i) pos[static_cast<std::size_t>(ext[i])] = static_cast<int>(i);
  for (int a = 0; a < pi.size(); ++a)
    for (int b = 0; b < pi.size(); ++b)
      if (pi.less(a, b)) CHECK(pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)]);
}

TEST_CASE("running example: T(D) and its F-values") {
  const Digraph d = fixtures::running_example();
  const EulerianSemilattice t = build_eulerian_semilattice(d);
  REQUIRE(t.elements.size() == 16);
  CHECK(t.elements[static_cast<std::size_t>(t.top)].size() == 1);
  CHECK(t.minimal.size() == 2);

  std::map<std::string, std::int64_t> by_blocks;
  for (std::size_t i = 0; i < t.elements.size(); ++i) by_blocks[blocks_string(d, t.elements[i])] = t.weights[i];
  CHECK(by_blocks.at("e1 e2 f1 f2 g1 g2 h1 h2") == -6);
  CHECK(by_blocks.at("e1 e2 | f1 f2 g1 g2 h1 h2") == 2);
  CHECK(by_blocks.at("e1 e2 g1 g2 h1 h2 | f1 f2") == 1);
  CHECK(by_blocks.at("e1 e2 f1 f2 h1 h2 | g1 g2") == 1);
  CHECK(by_blocks.at("e1 e2 f1 f2 | g1 g2 h1 h2") == 1);
  CHECK(by_blocks.at("e1 e2 g1 g2 | f1 f2 h1 h2") == 1);
  CHECK(by_blocks.at("e1 e2 f1 f2 g1 g2 | h1 h2") == 3);
  CHECK(by_blocks.at("e1 f1 g1 | e2 f2 g2 h1 h2") == 1);
  CHECK(by_blocks.at("e1 f1 g1 h1 h2 | e2 f2 g2") == 1);
  CHECK(by_blocks.at("e1 f1 g1 | e2 f2 g2 | h1 h2") == -1);
  CHECK(by_blocks.at("e1 e2 | f1 f2 | g1 g2 | h1 h2") == 1);

  std::map<std::size_t, std::vector<std::int64_t>> layers;
  for (std::size_t i = 0; i < t.elements.size(); ++i) layers[t.elements[i].size()].push_back(t.weights[i]);
  for (auto& [k, v] : layers) std::sort(v.begin(), v.end());
  CHECK(layers[1] == std::vector<std::int64_t>{-6});
  CHECK(layers[2] == std::vector<std::int64_t>{1, 1, 1, 1, 1, 1, 2, 3});
  CHECK(layers[3] == std::vector<std::int64_t>(6, -1));
  CHECK(layers[4] == std::vector<std::int64_t>{1});
}

TEST_CASE("running example: f, s, r and the special evaluations") {
  const Digraph d = fixtures::running_example();
  const MartinPolynomials m = martin_polynomial(d);
  CHECK(m.f == std::vector<std::int64_t>{6, 11, 6, 1});
  CHECK(m.s == IntPolynomial({0, 2, 3, 1}));
  CHECK(m.r == IntPolynomial({0, 6, 11, 6, 1}));
  CHECK(m.s(2) == 24);
  CHECK(m.r(1) == 24);
  CHECK(m.s(0) == 0);
  const CancellationReport c = verify_cancellation(d);
  CHECK(c.alternating_sum == 0);
  CHECK(c.holds);
  CHECK(brute_f(d) == m.f);
}

TEST_CASE("running example: intersection graphs and the chromatic identity") {
  const Digraph d = fixtures::running_example();
  const IdentityReport r = martin_chromatic_identity(d);
  CHECK(r.holds);
  CHECK(r.lhs == r.rhs);
  CHECK(r.terms.size() == 2);
  int four_cycles = 0, three_cycles = 0;
  for (const IdentityTerm& term : r.terms) {
    if (term.partition.size() == 4) {
      CHECK(term.characteristic == IntPolynomial({-4, 8, -5, 1}));
      ++four_cycles;
    } else {
      REQUIRE(term.partition.size() == 3);
      CHECK(term.characteristic == IntPolynomial({2, -3, 1}));
      ++three_cycles;
    }
    CHECK(term.chromatic_matches);
  }
  CHECK(four_cycles == 1);
  CHECK(three_cycles == 1);
}

TEST_CASE("running example: G vanishes above the cycle partitions; Mobius inversion recovers F") {
  const Digraph d = fixtures::running_example();
  const EulerianSemilattice t = build_eulerian_semilattice(d);
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    const bool minimal = std::find(t.minimal.begin(), t.minimal.end(), static_cast<int>(i)) != t.minimal.end();
    const std::int64_t g = cumulative_weight(t, t.elements[i]);
    if (minimal)
      CHECK(g == t.weights[i]);
    else
      CHECK(g == 0);
  }
  std::int64_t inverted = 0;
  for (int b : t.order.down_set(t.top)) inverted += t.order.mobius(b, t.top) * cumulative_weight(t, t.elements[static_cast<std::size_t>(b)]);
  CHECK(inverted == t.weights[static_cast<std::size_t>(t.top)]);
}

TEST_CASE("running example: the up-set of a cycle partition is the bond lattice of its intersection graph") {
  const Digraph d = fixtures::running_example();
  const EulerianSemilattice t = build_eulerian_semilattice(d);
  for (int a : t.minimal) {
    const SimpleGraph g = intersection_graph(d, t.elements[static_cast<std::size_t>(a)]);
    const BondLattice l = build_bond_lattice(g);
    CHECK(t.order.up_set(a).size() == l.elements.size());
    CHECK(t.order.mobius(a, t.top) == l.order.mobius(l.bottom, l.top));
  }
}

TEST_CASE("semilattice matches brute force over all set partitions") {
  std::vector<Digraph> samples{fixtures::running_example(), fixtures::directed_cycle(4), fixtures::complete_symmetric(3)};
  for (const Digraph& d : eulerian_digraph_corpus(6)) samples.push_back(d);
  for (const Digraph& d : samples) {
    const EulerianSemilattice t = build_eulerian_semilattice(d);
    auto sorted = t.elements;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == brute_t(d));
    for (std::size_t i = 0; i < t.elements.size(); ++i) CHECK(t.index_of(t.elements[i]) == static_cast<int>(i));
    CHECK(brute_f(d) == circuit_partition_counts(t));
  }
}

TEST_CASE("single directed cycles: f = (1), alternating sum -1") {
  for (int n = 2; n <= 6; ++n) {
    const Digraph d = fixtures::directed_cycle(n);
    const CancellationReport c = verify_cancellation(d);
    CHECK(c.single_cycle);
    CHECK(c.alternating_sum == -1);
    CHECK(c.holds);
    CHECK(martin_polynomial(d).s == IntPolynomial::constant(1));
  }
}

TEST_CASE("corpus invariants: cancellation, s(2), identity, divisibility") {
  for (const Digraph& d : eulerian_digraph_corpus(7)) {
    const MartinPolynomials m = martin_polynomial(d);
    std::int64_t prod = 1;
    for (int v = 0; v < d.num_vertices(); ++v) prod *= factorial(d.out_degree(v));
    CHECK(m.s(2) == prod);
    CHECK(verify_cancellation(d).holds);
    CHECK(martin_chromatic_identity(d).holds);
    int delta = 0;
    for (int v = 0; v < d.num_vertices(); ++v) delta = std::max(delta, d.out_degree(v));
    if (delta >= 2) CHECK(las_vergnas_divisibility(d).divisible);
  }
}

TEST_CASE("las vergnas divisibility on the complete symmetric digraph K3") {
  const DivisibilityReport r = las_vergnas_divisibility(fixtures::complete_symmetric(3));
  CHECK(r.max_out_degree == 2);
  CHECK(r.divisor == IntPolynomial({0, 1}));
  CHECK(r.divisible);
  CHECK_THROWS_AS(las_vergnas_divisibility(fixtures::directed_cycle(3)), PreconditionError);
}

TEST_CASE("semilattice preconditions") {
  CHECK_THROWS_AS(build_eulerian_semilattice(Digraph(2, {{0, 1}})), PreconditionError);
  CHECK_THROWS_AS(build_eulerian_semilattice(Digraph(1, {})), PreconditionError);
}
