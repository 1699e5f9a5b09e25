#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "circpart/corpus.hpp"
#include "circpart/error.hpp"
#include "circpart/heaps.hpp"
#include "circpart/lattice.hpp"
#include "circpart/trails.hpp"
#include "fixtures.hpp"

using namespace circpart;

namespace {

Trail make_trail(std::vector<int> vertices, std::vector<int> edges) { return Trail{std::move(vertices), std::move(edges)}; }

// Two directed triangles sharing vertex 0: 0->1->2->0 and 0->3->4->0.
Digraph figure_eight() { return Digraph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }

// Closed Eulerian trails from every start, stored as plain edge sequences.
std::set<std::vector<int>> brute_closed_trails(const Digraph& d) {
  std::set<std::vector<int>> out;
  std::vector<int> seq;
  std::function<void(int, int, EdgeMask)> walk = [&](int start, int at, EdgeMask used) {
    if (used == d.all_edges()) {
      if (at == start) out.insert(seq);
      return;
    }
    for (int e = 0; e < d.num_edges(); ++e) {
      if ((used >> e) & 1U || d.tail(e) != at) continue;
      seq.push_back(e);
      walk(start, d.head(e), used | bit(e));
      seq.pop_back();
    }
  };
  for (int v = 0; v < d.num_vertices(); ++v) walk(v, v, 0);
  return out;
}

}  // namespace

TEST_CASE("eulerian trails ending at an edge") {
  const Digraph d = fixtures::running_example();
  for (int e = 0; e < d.num_edges(); ++e) {
    const auto ws = eulerian_trails_ending_at(d, e);
    CHECK(ws.size() == 6);
    for (const Trail& w : ws) {
      validate_trail(d, w);
      CHECK(w.closed());
      CHECK(w.edges.back() == e);
      CHECK(w.edge_mask() == d.all_edges());
    }
  }
  CHECK(eulerian_trails_ending_at(fixtures::directed_cycle(2), 1).size() == 1);
  CHECK(eulerian_trails_ending_at(Digraph(3, {{0, 1}, {1, 2}}), 0).empty());
  CHECK_THROWS_AS(eulerian_trails_ending_at(d, 8), PreconditionError);
}

TEST_CASE("eulerian circuits and the BEST count") {
  const Digraph d = fixtures::running_example();
  CHECK(eulerian_circuits(d).size() == 6);
  CHECK(count_circuits_best(d) == 6);
  CHECK(eulerian_circuits(fixtures::directed_cycle(2)).size() == 1);
  CHECK(count_circuits_best(fixtures::directed_cycle(3)) == 1);
  const Digraph doubled(2, {{0, 1}, {1, 0}, {0, 1}, {1, 0}});
  CHECK(static_cast<std::int64_t>(eulerian_circuits(doubled).size()) == count_circuits_best(doubled));
  CHECK(count_circuits_best(doubled) == 2);
  const Digraph k3 = fixtures::complete_symmetric(3);
  CHECK(count_circuits_best(k3) == 3);
  CHECK(static_cast<std::int64_t>(brute_closed_trails(k3).size()) == 3 * k3.num_edges());
  CHECK_THROWS_AS(count_circuits_best(Digraph(2, {{0, 1}})), PreconditionError);
}

TEST_CASE("circuits: rotations collapse, count = brute closed trails / |E|") {
  for (const Digraph& d : eulerian_digraph_corpus(7)) {
    const auto circuits = eulerian_circuits(d);
    const auto brute = brute_closed_trails(d);
    CHECK(brute.size() == circuits.size() * static_cast<std::size_t>(d.num_edges()));
    std::set<std::vector<int>> canon;
    for (const auto& seq : brute) {
      std::vector<int> vs{d.tail(seq.front())};
      for (int e : seq) vs.push_back(d.head(e));
      canon.insert(canonical_circuit(make_trail(vs, seq)).edges());
    }
    CHECK(canon.size() == circuits.size());
    CHECK(static_cast<std::int64_t>(circuits.size()) == count_circuits_best(d));
    CHECK(count_eulerian_circuits(d, d.all_edges()) == count_circuits_best(d));
  }
}

TEST_CASE("trail counts per edge and per start vertex") {
  for (const Digraph& d : eulerian_digraph_corpus(6)) {
    const std::size_t c = eulerian_circuits(d).size();
    for (int e = 0; e < d.num_edges(); ++e) CHECK(eulerian_trails_ending_at(d, e).size() == c);
    for (int u = 0; u < d.num_vertices(); ++u) CHECK(eulerian_trails_from(d, u).size() == c * static_cast<std::size_t>(d.out_degree(u)));
  }
}

TEST_CASE("BEST equals enumeration on every corpus digraph up to 8 arcs") {
  for (const Digraph& d : eulerian_digraph_corpus(8)) CHECK(count_eulerian_circuits(d, d.all_edges()) == count_circuits_best(d));
}

TEST_CASE("canonical circuit is the least rotation") {
  const Trail w = make_trail({0, 3, 4, 0, 1, 2, 0}, {3, 4, 5, 0, 1, 2});
  const Circuit c = canonical_circuit(w);
  CHECK(c.edges() == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(c.trail.vertices == std::vector<int>{0, 1, 2, 0, 3, 4, 0});
}

TEST_CASE("cycle sequences") {
  const Trail cycle = make_trail({0, 1, 2, 0}, {0, 1, 2});
  CHECK(cycle_sequence(cycle).cycles.size() == 1);

  const Digraph d = figure_eight();
  const Trail eight = make_trail({0, 1, 2, 0, 3, 4, 0}, {0, 1, 2, 3, 4, 5});
  validate_trail(d, eight);
  const CycleSeq cs = cycle_sequence(eight);
  REQUIRE(cs.cycles.size() == 2);
  CHECK(cs.cycles[0] == make_trail({0, 1, 2, 0}, {0, 1, 2}));
  CHECK(cs.cycles[1] == make_trail({0, 3, 4, 0}, {3, 4, 5}));
  CHECK(reassemble(cs) == eight);

  CHECK_THROWS_AS(cycle_sequence(make_trail({0, 1, 2}, {0, 1})), PreconditionError);
}

TEST_CASE("running example: every trail ends on one of the two cycle partitions") {
  const Digraph d = fixtures::running_example();
  const auto q = cycle_partitions(d);
  REQUIRE(q.size() == 2);
  for (int e = 0; e < d.num_edges(); ++e) {
    std::size_t total = 0;
    for (const SetPartition& a : q) total += trails_with_cycle_partition(d, e, a).size();
    CHECK(total == 6);
    for (const Trail& w : eulerian_trails_ending_at(d, e)) {
      const SetPartition a = cycle_partition(cycle_sequence(w), d.num_edges());
      CHECK(std::find(q.begin(), q.end(), a) != q.end());
    }
  }
}

TEST_CASE("cycle sequence round trip and fibers over the corpus") {
  for (const Digraph& d : eulerian_digraph_corpus(7)) {
    const auto q = cycle_partitions(d);
    for (int e = 0; e < d.num_edges(); ++e) {
      std::size_t total = 0;
      for (const SetPartition& a : q) {
        const auto fiber = trails_with_cycle_partition(d, e, a);
        total += fiber.size();
        // Fiber size is the number of full pyramids over G_a with apex the cycle through e.
        const SimpleGraph ga = intersection_graph(d, a);
        CHECK(static_cast<std::int64_t>(fiber.size()) == count_full_pyramids(ga, ga.all_vertices(), a.block_of(e)));
      }
      CHECK(total == eulerian_trails_ending_at(d, e).size());
      for (const Trail& w : eulerian_trails_ending_at(d, e)) {
        const CycleSeq cs = cycle_sequence(w);
        CHECK(reassemble(cs) == w);
        EdgeMask seen = 0;
        for (const Trail& c : cs.cycles) {
          CHECK((seen & c.edge_mask()) == 0);
          seen |= c.edge_mask();
          CHECK(is_directed_cycle(d, c.edge_mask()));
        }
        CHECK(seen == d.all_edges());
      }
    }
  }
}

TEST_CASE("insertion") {
  // j = 0: plain concatenation.
  const Trail a = make_trail({0, 1, 0}, {0, 1});
  const Trail b = make_trail({0, 2, 0}, {2, 3});
  CHECK(insert_trail(a, b) == make_trail({0, 1, 0, 2, 0}, {0, 1, 2, 3}));

  // Triangle at an interior vertex of a square.
  const Trail square = make_trail({0, 1, 2, 3, 0}, {0, 1, 2, 3});
  const Trail tri = make_trail({2, 4, 5, 2}, {4, 5, 6});
  const Trail r = insert_trail(tri, square);
  CHECK(r == make_trail({0, 1, 2, 4, 5, 2, 3, 0}, {0, 1, 4, 5, 6, 2, 3}));
  CHECK(r.length() == 7);
  CHECK(r.closed());

  CHECK_THROWS_WITH_AS(insert_trail(make_trail({0, 1, 0}, {0, 4}), square), doctest::Contains("share an edge"), PreconditionError);
  CHECK_THROWS_WITH_AS(insert_trail(make_trail({7, 8, 7}, {9, 10}), square), doctest::Contains("does not occur"), PreconditionError);
  CHECK_THROWS_WITH_AS(insert_trail(make_trail({0, 1}, {9}), square), doctest::Contains("not closed"), PreconditionError);
  // Inner trail based at 2 also touches 1, which the square meets first.
  CHECK_THROWS_WITH_AS(insert_trail(make_trail({2, 1, 2}, {8, 9}), square), doctest::Contains("first-occurrence"), PreconditionError);
}

TEST_CASE("validate_trail rejects bad walks") {
  const Digraph d = figure_eight();
  CHECK_THROWS_AS(validate_trail(d, make_trail({0, 1, 0}, {0, 0})), PreconditionError);
  CHECK_THROWS_AS(validate_trail(d, make_trail({1, 2}, {0})), PreconditionError);
}

TEST_CASE("undirected circuits of small Veblen multigraphs") {
  CHECK(count_undirected_eulerian_circuits(Multigraph(3, {{0, 1}, {1, 2}, {0, 2}})) == 2);
  CHECK(count_undirected_eulerian_circuits(Multigraph(2, {{0, 1}, {0, 1}})) == 2);
  CHECK(count_undirected_eulerian_circuits(Multigraph(3, {{0, 1}, {1, 2}})) == 0);
}
