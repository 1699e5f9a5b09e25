#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "circpart/canonical.hpp"
#include "circpart/corpus.hpp"
#include "circpart/error.hpp"
#include "circpart/graph.hpp"
#include "fixtures.hpp"

using namespace circpart;

namespace {

Multigraph doubled_edge() { return Multigraph(2, {{0, 1}, {0, 1}}); }
Multigraph triangle() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

Digraph relabel(const Digraph& d, const std::vector<int>& perm, std::mt19937_64& rng) {
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) arcs.push_back({perm[static_cast<std::size_t>(a.tail)], perm[static_cast<std::size_t>(a.head)]});
  std::shuffle(arcs.begin(), arcs.end(), rng);
  return Digraph(d.num_vertices(), arcs);
}

}  // namespace

TEST_CASE("degrees") {
  const Digraph d = fixtures::running_example();
  CHECK(d.out_degree(2) == 3);
  CHECK(d.in_degree(2) == 3);
  CHECK(d.out_degree(3) == 1);
  CHECK(Digraph(1, {}).out_degree(0) == 0);
  CHECK(fixtures::directed_cycle(2).out_degree(0) == 1);
  CHECK_THROWS_AS(d.out_degree(4), PreconditionError);
  CHECK(d.multiplicity(0, 1) == 1);
  CHECK(Multigraph(2, {{0, 1}, {1, 0}, {0, 1}}).multiplicity(1, 0) == 3);
}

TEST_CASE("loops are rejected") {
  CHECK_THROWS_AS(Digraph(2, {{1, 1}}), PreconditionError);
  CHECK_THROWS_AS(Multigraph(2, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Digraph(2, {{0, 2}}), PreconditionError);
}

TEST_CASE("is_eulerian") {
  CHECK(is_eulerian(fixtures::running_example()));
  CHECK_FALSE(is_eulerian(Digraph(2, {{0, 1}})));
  CHECK_FALSE(is_eulerian(Digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}})));
  CHECK_FALSE(is_eulerian(Digraph(3, {})));
  // Isolated vertices do not matter.
  CHECK(is_eulerian(Digraph(5, {{0, 1}, {1, 0}})));
  const Digraph d = fixtures::running_example();
  CHECK(is_eulerian(d, 0b00000011));
  CHECK_FALSE(is_eulerian(d, 0b00000001));
  CHECK_FALSE(is_eulerian(d, 0));
}

TEST_CASE("eulerian implies balanced at every touched vertex") {
  for (const Digraph& d : eulerian_digraph_corpus(8)) {
    REQUIRE(is_eulerian(d));
    for (int v = 0; v < d.num_vertices(); ++v) CHECK(d.in_degree(v) == d.out_degree(v));
  }
}

TEST_CASE("orientations") {
  CHECK(orientations(Multigraph(2, {{0, 1}})).size() == 2);
  CHECK(orientations(doubled_edge()).size() == 4);
  const auto tri = orientations(triangle());
  CHECK(tri.size() == 8);
  CHECK(std::count_if(tri.begin(), tri.end(), [](const Digraph& o) { return is_acyclic(o); }) == 6);
  for (const Digraph& o : tri) CHECK(is_orientation_of(o, triangle()));
  CHECK_FALSE(is_orientation_of(fixtures::directed_cycle(3), doubled_edge()));
}

TEST_CASE("approx classes and their sizes") {
  const Multigraph x = doubled_edge();
  const Digraph both(2, {{0, 1}, {0, 1}});
  const Digraph split(2, {{0, 1}, {1, 0}});
  const Digraph swapped(2, {{1, 0}, {0, 1}});
  CHECK(approx_class(split) == approx_class(swapped));
  CHECK_FALSE(approx_class(split) == approx_class(both));
  CHECK(approx_class_size(split, x) == 2);
  CHECK(approx_class_size(both, x) == 1);
  CHECK(approx_class_size(Digraph(3, {{0, 1}, {1, 2}, {0, 2}}), triangle()) == 1);
  CHECK_THROWS_AS(approx_class_size(split, triangle()), PreconditionError);
}

TEST_CASE("class sizes add up to 2^|E| and agree with enumeration") {
  for (const Multigraph& x : veblen_corpus(6)) {
    std::map<ApproxClass, std::int64_t> seen;
    std::map<ApproxClass, Digraph> representative;
    for_each_orientation(x, [&](const Digraph& o) {
      ++seen[approx_class(o)];
      representative.try_emplace(approx_class(o), o);
      for (int e = 0; e < x.num_edges(); ++e) {
        const Ends& ends = x.ends(e);
        CHECK(x.multiplicity(ends.u, ends.v) == o.multiplicity(ends.u, ends.v) + o.multiplicity(ends.v, ends.u));
      }
    });
    std::int64_t total = 0;
    for (const auto& [cls, count] : seen) {
      CHECK(count == approx_class_size(representative.at(cls), x));
      CHECK(approx_class(digraph_of(cls)) == cls);
      CHECK(count * arc_multiplicity_factorial_product(digraph_of(cls)) == parallel_factorial_product(x));
      total += count;
    }
    CHECK(total == (std::int64_t{1} << x.num_edges()));
  }
}

TEST_CASE("factorial products") {
  const Multigraph x(3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {1, 2}});
  CHECK(parallel_factorial_product(x) == 12);
  const Digraph d(3, {{0, 1}, {0, 1}, {1, 0}, {1, 2}, {2, 1}});
  CHECK(arc_multiplicity_factorial_product(d) == 2);
  CHECK(out_degree_factorial_product(d) == 2 * 2);
}

TEST_CASE("veblen, acyclicity, sinks") {
  CHECK(is_veblen(doubled_edge()));
  CHECK(is_veblen(triangle()));
  CHECK_FALSE(is_veblen(Multigraph(3, {{0, 1}, {1, 2}})));
  const Digraph path(3, {{0, 1}, {1, 2}});
  CHECK(is_acyclic(path));
  CHECK(sinks(path) == std::vector<int>{2});
  CHECK_FALSE(is_acyclic(fixtures::directed_cycle(3)));
}

TEST_CASE("simple graph helpers") {
  const SimpleGraph g(4, {{0, 1}, {1, 2}});
  CHECK(g.edge_between(2, 1) == 1);
  CHECK(g.edge_between(0, 3) == -1);
  CHECK(g.induces_connected(0b0111));
  CHECK_FALSE(g.induces_connected(0b0101));
  CHECK(g.component_of(0, g.all_edges()) == 0b0111);
  CHECK_FALSE(g.is_connected());
  CHECK_THROWS_AS(SimpleGraph::from_multigraph(doubled_edge()), PreconditionError);
  CHECK(without_isolated_vertices(Multigraph(4, {{1, 3}})).num_vertices() == 2);
}

TEST_CASE("canonical forms are invariant under relabeling and separate non-isomorphic graphs") {
  std::mt19937_64 rng(5);
  const auto corpus = eulerian_digraph_corpus(7);
  std::set<std::string> keys;
  for (const Digraph& d : corpus) {
    const std::string k = canonical_form(d);
    keys.insert(k);
    std::vector<int> perm(static_cast<std::size_t>(d.num_vertices()));
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(relabel(d, perm, rng)) == k);
    }
  }
  CHECK(keys.size() == corpus.size());
}

TEST_CASE("eulerian corpus agrees with brute force over small arc multisets") {
  // Every multiset of at most 5 arcs on 5 labeled vertices, kept when connected Eulerian.
  const int n = 5, max_arcs = 5;
  std::vector<Arc> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) pairs.push_back({u, v});
  std::set<std::string> brute;
  std::vector<Arc> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!chosen.empty()) {
      const Digraph d(n, chosen);
      if (is_eulerian(d)) brute.insert(canonical_form(without_isolated_vertices(underlying_multigraph(d))) + "|" +
                                       canonical_form(Digraph(n, chosen)));
    }
    if (static_cast<int>(chosen.size()) == max_arcs) return;
    for (std::size_t i = from; i < pairs.size(); ++i) {
      chosen.push_back(pairs[i]);
      rec(i);
      chosen.pop_back();
    }
  };
  rec(0);
  // Count distinct digraphs ignoring isolated vertices.
  std::set<std::string> brute_keys;
  for (const std::string& k : brute) brute_keys.insert(k.substr(k.find('|') + 1));
  std::set<std::string> corpus_keys;
  for (const Digraph& d : eulerian_digraph_corpus(max_arcs)) {
    std::vector<Arc> arcs = d.arcs();
    corpus_keys.insert(canonical_form(Digraph(n, arcs)));
  }
  CHECK(corpus_keys.size() == eulerian_digraph_corpus(max_arcs).size());
  CHECK(brute_keys == corpus_keys);
}

TEST_CASE("simple graph corpus counts") {
  const std::vector<std::size_t> cumulative{1, 2, 4, 10, 31, 143};
  for (int n = 1; n <= 6; ++n) CHECK(connected_graph_corpus(n).size() == cumulative[static_cast<std::size_t>(n - 1)]);
  for (const SimpleGraph& g : connected_graph_corpus(6)) CHECK(g.is_connected());
}

TEST_CASE("veblen corpus holds connected even multigraphs") {
  for (const Multigraph& x : veblen_corpus(8)) {
    CHECK(is_veblen(x));
    CHECK(is_edge_connected_support(x, x.all_edges()));
  }
}
