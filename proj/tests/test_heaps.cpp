#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "circpart/bond.hpp"
#include "circpart/corpus.hpp"
#include "circpart/decomposition.hpp"
#include "circpart/error.hpp"
#include "circpart/heaps.hpp"
#include "circpart/lattice.hpp"
#include "fixtures.hpp"

using namespace circpart;

namespace {

// Intersection graphs of the running example's two cycle partitions.
PieceSystem four_two_cycles() { return PieceSystem(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }
PieceSystem triangle() { return PieceSystem(3, {{0, 1}, {1, 2}, {0, 2}}); }

// A heap built by stacking random singletons; ids start at `first_id`.
Heap random_heap(const PieceSystem& ps, int size, int first_id, std::mt19937_64& rng) {
  Heap h;
  for (int i = 0; i < size; ++i) {
    const Heap s = Heap::singleton(first_id + i, static_cast<int>(rng() % static_cast<std::uint64_t>(ps.num_vertices())));
    h = h.empty() ? s : compose(h, s, ps);
  }
  return h;
}

// Order relation as (id, id) pairs, independent of internal positions.
std::set<std::pair<int, int>> relation(const Heap& h) {
  std::set<std::pair<int, int>> r;
  for (int i = 0; i < h.size(); ++i)
    for (int j = 0; j < h.size(); ++j)
      if (h.leq(i, j)) r.emplace(h.id(i), h.id(j));
  return r;
}

Heap compose_any(const Heap& a, const Heap& b, const PieceSystem& ps) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return compose(a, b, ps);
}

}  // namespace

TEST_CASE("heap axioms and the sandwich check") {
  const PieceSystem ps(3, {{0, 1}});
  const Heap antichain({0, 1}, {0, 2}, {});
  CHECK(is_heap(antichain, ps).ok);
  CHECK(is_heap_sandwich(antichain, ps));
  const Heap loose({0, 1}, {0, 1}, {});
  const HeapCheck bad = is_heap(loose, ps);
  CHECK_FALSE(bad.ok);
  CHECK(bad.witness.find("incomparable") != std::string::npos);
  CHECK_FALSE(is_heap_sandwich(loose, ps));
  const Heap far_cover({0, 1}, {0, 2}, {{0, 1}});
  CHECK_FALSE(is_heap(far_cover, ps).ok);
  CHECK_THROWS_AS(is_heap(Heap({0}, {5}, {}), ps), PreconditionError);
  CHECK_THROWS_AS(Heap({0, 1}, {0, 0}, {{0, 1}, {1, 0}}), PreconditionError);
}

TEST_CASE("axiom check and sandwich check agree on random labeled posets") {
  std::mt19937_64 rng(41);
  const PieceSystem ps = four_two_cycles();
  int heaps = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<int> ids(static_cast<std::size_t>(n)), labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      ids[static_cast<std::size_t>(i)] = i;
      labels[static_cast<std::size_t>(i)] = static_cast<int>(rng() % 4);
    }
    std::vector<std::pair<int, int>> le;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2) le.emplace_back(i, j);
    const Heap h(ids, labels, le);
    const bool axioms = is_heap(h, ps).ok;
    CHECK(axioms == is_heap_sandwich(h, ps));
    heaps += axioms;
  }
  CHECK(heaps > 0);
}

TEST_CASE("composition monoid") {
  const PieceSystem ps(2, {{0, 1}});
  const Heap chain = compose(Heap::singleton(0, 0), Heap::singleton(1, 1), ps);
  CHECK(chain.leq(0, 1));
  CHECK(chain.covers() == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(compose_any(chain, Heap(), ps) == chain);
  CHECK_THROWS_AS(compose(chain, Heap::singleton(1, 0), ps), PreconditionError);

  std::mt19937_64 rng(43);
  const PieceSystem big = four_two_cycles();
  for (int trial = 0; trial < 300; ++trial) {
    const Heap a = random_heap(big, 1 + static_cast<int>(rng() % 4), 0, rng);
    const Heap b = random_heap(big, 1 + static_cast<int>(rng() % 4), 10, rng);
    const Heap c = random_heap(big, 1 + static_cast<int>(rng() % 4), 20, rng);
    const Heap left = compose(compose(a, b, big), c, big);
    const Heap right = compose(a, compose(b, c, big), big);
    CHECK(relation(left) == relation(right));
    CHECK(left == right);
    CHECK(is_heap(left, big).ok);
    CHECK(is_heap_sandwich(left, big));
  }
}

TEST_CASE("push-down") {
  const PieceSystem ps = triangle();
  const Heap pyramid = compose(compose(Heap::singleton(0, 0), Heap::singleton(1, 1), ps), Heap::singleton(2, 2), ps);
  REQUIRE(pyramid.is_pyramid());
  auto [p, rest] = push_down(pyramid, pyramid.maximal_elements().front());
  CHECK(p == pyramid);
  CHECK(rest.empty());

  const PieceSystem apart(2, {});
  const Heap two({0, 1}, {0, 1}, {});
  auto [p0, r0] = push_down(two, 0);
  CHECK(p0 == Heap::singleton(0, 0));
  CHECK(r0 == Heap::singleton(1, 1));
  CHECK_THROWS_AS(push_down(pyramid, 0), PreconditionError);

  std::mt19937_64 rng(47);
  const PieceSystem big = four_two_cycles();
  for (int trial = 0; trial < 300; ++trial) {
    Heap h = random_heap(big, 1 + static_cast<int>(rng() % 7), 0, rng);
    const Heap original = h;
    std::vector<Heap> pyramids;
    while (!h.empty()) {
      const auto maxima = h.maximal_elements();
      const int w = maxima[rng() % maxima.size()];
      auto [top, below] = push_down(h, w);
      CHECK(top.is_pyramid());
      CHECK(below.maximal_elements().size() + 1 == maxima.size());
      CHECK(compose_any(top, below, big) == h);
      pyramids.push_back(top);
      h = below;
    }
    Heap rebuilt;
    for (const Heap& p : pyramids) rebuilt = compose_any(rebuilt, p, big);
    CHECK(rebuilt == original);
  }
}

TEST_CASE("full pyramids: small cases and balance") {
  CHECK(full_pyramids(PieceSystem(1, {}), 0).size() == 1);
  const PieceSystem two(2, {{0, 1}});
  CHECK(full_pyramids(two, 0).size() == 1);
  CHECK(full_pyramids(two, 1).size() == 1);
  CHECK(full_pyramids(PieceSystem(2, {}), 0).empty());
  CHECK_THROWS_AS(full_pyramids(two, 2), PreconditionError);
  for (int b = 0; b < 3; ++b) CHECK(full_pyramids(triangle(), b).size() == 2);
  for (int b = 0; b < 4; ++b) CHECK(full_pyramids(four_two_cycles(), b).size() == 4);
}

TEST_CASE("full pyramids against unique-sink orientations, both directions") {
  for (const PieceSystem& ps : connected_graph_corpus(5)) {
    const int k = ps.num_vertices();
    const std::int64_t first = count_full_pyramids(ps, ps.all_vertices(), 0);
    const BondLattice l = build_bond_lattice(ps);
    for (int b = 0; b < k; ++b) {
      const auto pyramids = full_pyramids(ps, b);
      const auto orients = unique_sink_orientations(ps, b);
      CHECK(static_cast<std::int64_t>(pyramids.size()) == first);
      CHECK(count_full_pyramids(ps, ps.all_vertices(), b) == first);
      CHECK(pyramids.size() == orients.size());
      CHECK(l.order.mobius(l.bottom, l.top) == ((k - 1) % 2 ? -first : first));
      std::set<Heap> seen;
      for (const Heap& p : pyramids) {
        CHECK(p.is_pyramid());
        CHECK(p.is_full(k));
        CHECK(p.label(p.maximal_elements().front()) == b);
        CHECK(is_heap(p, ps).ok);
        const Digraph o = pyramid_to_orientation(p, ps);
        CHECK(sinks(o) == std::vector<int>{b});
        CHECK(is_acyclic(o));
        CHECK(orientation_to_pyramid(o, ps) == p);
        seen.insert(p);
      }
      CHECK(seen.size() == pyramids.size());
      for (const Digraph& o : orients) CHECK(pyramid_to_orientation(orientation_to_pyramid(o, ps), ps).arcs() == o.arcs());
    }
  }
}

TEST_CASE("pyramid recursion over connected bipartitions") {
  const PieceSystem two(2, {{0, 1}});
  const PyramidRecursionReport r = pyramid_recursion_check(two, 0, 1);
  CHECK(r.lhs == 1);
  CHECK(r.rhs == 1);
  CHECK(r.holds);
  const PyramidRecursionReport t = pyramid_recursion_check(triangle(), 0, 1);
  CHECK(t.bipartitions == 2);
  CHECK(t.holds);
  const PieceSystem a1 = four_two_cycles();
  for (const Ends& e : a1.edges()) {
    CHECK(pyramid_recursion_check(a1, e.u, e.v).holds);
    CHECK(pyramid_recursion_check(a1, e.v, e.u).holds);
  }
  CHECK_THROWS_AS(pyramid_recursion_check(PieceSystem(3, {{0, 1}, {1, 2}}), 0, 2), PreconditionError);
  for (const PieceSystem& ps : connected_graph_corpus(5))
    for (const Ends& e : ps.edges()) CHECK(pyramid_recursion_check(ps, e.u, e.v).holds);
}

TEST_CASE("pyramid orientation on two pieces points at the apex") {
  const PieceSystem two(2, {{0, 1}});
  const Heap chain = compose(Heap::singleton(0, 0), Heap::singleton(1, 1), two);
  const Digraph o = pyramid_to_orientation(chain, two);
  CHECK(o.arc(0) == Arc{0, 1});
  CHECK(sinks(o) == std::vector<int>{1});
  CHECK(pyramid_to_orientation(Heap::singleton(0, 0), PieceSystem(1, {})).num_edges() == 0);
  CHECK(orientation_to_pyramid(Digraph(3, {{0, 1}, {2, 1}, {2, 0}}), triangle()).is_pyramid());
  CHECK_THROWS_AS(orientation_to_pyramid(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}), triangle()), PreconditionError);
  CHECK_THROWS_AS(orientation_to_pyramid(Digraph(3, {{1, 0}, {1, 2}}), PieceSystem(3, {{0, 1}, {1, 2}})), PreconditionError);
}

TEST_CASE("decomposition pyramids") {
  const Digraph cyc = fixtures::directed_cycle(3);
  CHECK(decomposition_pyramids(cyc, 0).size() == 1);
  const Digraph d = fixtures::running_example();
  for (int e = 0; e < d.num_edges(); ++e) {
    const auto dps = decomposition_pyramids(d, e);
    CHECK(dps.size() == 6);
    for (const SetPartition& a : cycle_partitions(d)) {
      const auto fiber = trails_with_cycle_partition(d, e, a);
      CHECK(std::count_if(dps.begin(), dps.end(), [&](const DecompositionPyramid& p) { return p.partition == a; }) ==
            static_cast<std::ptrdiff_t>(fiber.size()));
    }
  }
  CHECK_THROWS_AS(decomposition_pyramids(d, 8), PreconditionError);
}

TEST_CASE("trails and decomposition pyramids are in bijection") {
  std::vector<Digraph> samples{fixtures::running_example(), fixtures::complete_symmetric(3)};
  for (const Digraph& d : eulerian_digraph_corpus(7)) samples.push_back(d);
  for (const Digraph& d : samples) {
    for (int e = 0; e < d.num_edges(); ++e) {
      const auto trails = eulerian_trails_ending_at(d, e);
      const auto dps = decomposition_pyramids(d, e);
      CHECK(trails.size() == dps.size());
      std::set<std::pair<SetPartition, Heap>> images;
      for (const Trail& w : trails) {
        const DecompositionPyramid p = trail_to_pyramid(d, w);
        CHECK(p.pyramid.is_pyramid());
        CHECK(p.pyramid.label(p.pyramid.maximal_elements().front()) == p.apex);
        CHECK(p.apex == p.partition.block_of(e));
        CHECK(pyramid_to_trail(d, e, p) == w);
        images.emplace(p.partition, p.pyramid);
      }
      CHECK(images.size() == trails.size());
      for (const DecompositionPyramid& p : dps) {
        const Trail w = pyramid_to_trail(d, e, p);
        const DecompositionPyramid back = trail_to_pyramid(d, w);
        CHECK(back.partition == p.partition);
        CHECK(back.pyramid == p.pyramid);
      }
    }
  }
}
