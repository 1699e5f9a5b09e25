#include "circpart/bond.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "circpart/canonical.hpp"
#include "circpart/error.hpp"

namespace circpart {

EdgeOrder::EdgeOrder(std::vector<int> ascending) : ascending_(std::move(ascending)) {
  rank_.assign(ascending_.size(), -1);
  for (std::size_t i = 0; i < ascending_.size(); ++i) {
    int e = ascending_[i];
    if (e < 0 || static_cast<std::size_t>(e) >= ascending_.size() || rank_[static_cast<std::size_t>(e)] != -1)
      throw PreconditionError("edge order is not a permutation of the edge ids");
    rank_[static_cast<std::size_t>(e)] = static_cast<int>(i);
  }
}

EdgeOrder EdgeOrder::identity(int num_edges) {
  std::vector<int> v(static_cast<std::size_t>(num_edges));
  std::iota(v.begin(), v.end(), 0);
  return EdgeOrder(std::move(v));
}

EdgeOrder EdgeOrder::shuffled(int num_edges, std::mt19937_64& rng) {
  std::vector<int> v(static_cast<std::size_t>(num_edges));
  std::iota(v.begin(), v.end(), 0);
  // Fisher-Yates with explicit draws so the result is portable across standard libraries.
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(rng() % i)]);
  return EdgeOrder(std::move(v));
}

int EdgeOrder::max_edge(EdgeMask edges) const {
  if (edges == 0) throw PreconditionError("largest edge of an empty set");
  int best = -1;
  for_each_bit(edges, [&](int e) {
    if (best < 0 || rank(e) > rank(best)) best = e;
  });
  return best;
}

int BondLattice::index_of(const SetPartition& x) const {
  auto it = std::find(elements.begin(), elements.end(), x);
  if (it == elements.end()) throw PreconditionError("partition is not an element of the bond lattice");
  return static_cast<int>(it - elements.begin());
}

std::vector<SetPartition> connected_partitions(const SimpleGraph& g) {
  const int n = g.num_vertices();
  if (n > 10) throw SizeError("bond lattices are capped at 10 vertices");
  std::vector<SetPartition> out;
  std::vector<EdgeMask> blocks;
  std::function<void(EdgeMask)> rec = [&](EdgeMask unassigned) {
    if (unassigned == 0) {
      out.emplace_back(n, blocks);
      return;
    }
    const int v = lowest_bit(unassigned);
    const EdgeMask rest = unassigned & ~bit(v);
    EdgeMask sub = rest;
    while (true) {
      EdgeMask block = sub | bit(v);
      if (g.induces_connected(block)) {
        blocks.push_back(block);
        rec(unassigned & ~block);
        blocks.pop_back();
      }
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
  };
  rec(g.all_vertices());
  return out;
}

BondLattice build_bond_lattice(const SimpleGraph& g) {
  const int n = g.num_vertices();
  BondLattice l;
  l.graph = g;
  l.elements = connected_partitions(g);
  std::sort(l.elements.begin(), l.elements.end(), [](const SetPartition& a, const SetPartition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  for (const auto& x : l.elements) l.rank.push_back(n - static_cast<int>(x.size()));
  l.order = FinitePoset(static_cast<int>(l.elements.size()), [&](int a, int b) {
    return l.elements[static_cast<std::size_t>(a)].refines(l.elements[static_cast<std::size_t>(b)]);
  });
  l.bottom = 0;
  l.top = static_cast<int>(l.elements.size()) - 1;
  return l;
}

IntPolynomial characteristic_polynomial(const BondLattice& l) {
  const auto& row = l.order.mobius_row(l.bottom);
  const int top_rank = l.rank[static_cast<std::size_t>(l.top)];
  IntPolynomial chi;
  for (std::size_t x = 0; x < l.elements.size(); ++x)
    chi += IntPolynomial::monomial(row[x], top_rank - l.rank[x]);
  return chi;
}

std::vector<EdgeMask> graph_cycles(const SimpleGraph& g) {
  if (g.num_vertices() > 8 || g.num_edges() > 16)
    throw SizeError("cycle enumeration is capped at 8 vertices and 16 edges");
  std::set<EdgeMask> found;
  for (int s = 0; s < g.num_vertices(); ++s) {
    // Paths s -> ... over vertices larger than s, closed by an edge back to s.
    std::function<void(int, EdgeMask, EdgeMask, int)> rec = [&](int v, EdgeMask visited, EdgeMask edges, int len) {
      EdgeMask next = g.neighbors(v) & ~visited & ~full_mask(s + 1);
      if (len >= 2 && g.adjacent(v, s)) found.insert(edges | bit(g.edge_between(v, s)));
      for_each_bit(next, [&](int w) { rec(w, visited | bit(w), edges | bit(g.edge_between(v, w)), len + 1); });
    };
    rec(s, bit(s), 0, 0);
  }
  return {found.begin(), found.end()};
}

std::vector<EdgeMask> broken_circuits(const SimpleGraph& g, const EdgeOrder& ord) {
  if (ord.size() != g.num_edges()) throw PreconditionError("edge order size differs from the edge count");
  std::vector<EdgeMask> out;
  for (EdgeMask c : graph_cycles(g)) out.push_back(c & ~bit(ord.max_edge(c)));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_nbc(EdgeMask edges, const std::vector<EdgeMask>& broken) {
  return std::none_of(broken.begin(), broken.end(), [&](EdgeMask b) { return (edges & b) == b; });
}

std::vector<EdgeMask> nbc_sets(const SimpleGraph& g, const EdgeOrder& ord) {
  const auto broken = broken_circuits(g, ord);
  std::vector<EdgeMask> out;
  std::function<void(int, EdgeMask)> rec = [&](int next, EdgeMask chosen) {
    out.push_back(chosen);
    for (int e = next; e < g.num_edges(); ++e) {
      EdgeMask s = chosen | bit(e);
      if (is_nbc(s, broken)) rec(e + 1, s);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeMask> nbc_bases(const SimpleGraph& g, const EdgeOrder& ord) {
  if (!g.is_connected()) throw PreconditionError("NBC bases need a connected graph");
  std::vector<EdgeMask> out;
  for (EdgeMask s : nbc_sets(g, ord))
    if (popcount(s) == g.num_vertices() - 1) out.push_back(s);
  return out;
}

SetPartition component_partition(const SimpleGraph& g, EdgeMask edges) {
  std::vector<EdgeMask> blocks;
  EdgeMask left = g.all_vertices();
  while (left) {
    EdgeMask c = g.component_of(lowest_bit(left), edges);
    blocks.push_back(c);
    left &= ~c;
  }
  return SetPartition(g.num_vertices(), std::move(blocks));
}

RotaReport rota_check(const BondLattice& l, const EdgeOrder& ord) {
  std::vector<std::int64_t> counts(l.elements.size(), 0);
  for (EdgeMask s : nbc_sets(l.graph, ord)) ++counts[static_cast<std::size_t>(l.index_of(component_partition(l.graph, s)))];
  const auto& row = l.order.mobius_row(l.bottom);
  RotaReport r;
  for (std::size_t x = 0; x < l.elements.size(); ++x) {
    RotaEntry e;
    e.element = static_cast<int>(x);
    e.mobius = row[x];
    e.nbc_count = counts[x];
    e.holds = e.mobius == (l.rank[x] % 2 ? -1 : 1) * e.nbc_count;
    r.all_hold = r.all_hold && e.holds;
    r.entries.push_back(e);
  }
  return r;
}

namespace {

struct AdjGraph {
  int n;
  std::vector<EdgeMask> adj;
};

std::string adj_key(const AdjGraph& h) {
  std::vector<int> m(static_cast<std::size_t>(h.n * h.n), 0);
  for (int u = 0; u < h.n; ++u)
    for_each_bit(h.adj[static_cast<std::size_t>(u)], [&](int v) { m[static_cast<std::size_t>(u * h.n + v)] = 1; });
  return canonical_form(h.n, m);
}

IntPolynomial deletion_contraction(const AdjGraph& h, std::unordered_map<std::string, IntPolynomial>& memo) {
  int u = -1;
  for (int v = 0; v < h.n && u < 0; ++v)
    if (h.adj[static_cast<std::size_t>(v)]) u = v;
  if (u < 0) return IntPolynomial::monomial(1, h.n);
  // Isolated vertices each contribute a factor t.
  EdgeMask isolated = 0;
  for (int v = 0; v < h.n; ++v)
    if (!h.adj[static_cast<std::size_t>(v)]) isolated |= bit(v);
  if (isolated) {
    AdjGraph core{h.n - popcount(isolated), {}};
    std::vector<int> index(static_cast<std::size_t>(h.n), -1);
    int k = 0;
    for (int v = 0; v < h.n; ++v)
      if (!((isolated >> v) & 1U)) index[static_cast<std::size_t>(v)] = k++;
    for (int v = 0; v < h.n; ++v) {
      if ((isolated >> v) & 1U) continue;
      EdgeMask m = 0;
      for_each_bit(h.adj[static_cast<std::size_t>(v)], [&](int w) { m |= bit(index[static_cast<std::size_t>(w)]); });
      core.adj.push_back(m);
    }
    return IntPolynomial::monomial(1, popcount(isolated)) * deletion_contraction(core, memo);
  }
  const std::string key = adj_key(h);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int v = 63 - std::countl_zero(h.adj[static_cast<std::size_t>(u)]);

  AdjGraph del = h;
  del.adj[static_cast<std::size_t>(u)] &= ~bit(v);
  del.adj[static_cast<std::size_t>(v)] &= ~bit(u);

  // Merge v into u, then drop v and shift the higher vertices down.
  AdjGraph con{h.n - 1, {}};
  auto relabel = [&](EdgeMask m) {
    if ((m >> v) & 1U) m = (m & ~bit(v)) | bit(u);
    EdgeMask low = m & full_mask(v);
    EdgeMask high = (m >> (v + 1)) << v;
    return low | high;
  };
  for (int w = 0; w < h.n; ++w) {
    if (w == v) continue;
    EdgeMask m = h.adj[static_cast<std::size_t>(w)];
    if (w == u) m |= h.adj[static_cast<std::size_t>(v)];
    m = relabel(m);
    int wn = w < v ? w : w - 1;
    m &= ~bit(wn);
    con.adj.push_back(m);
  }
  IntPolynomial p = deletion_contraction(del, memo) - deletion_contraction(con, memo);
  memo.emplace(key, p);
  return p;
}

}  // namespace

IntPolynomial chromatic_polynomial(const SimpleGraph& g) {
  if (g.num_vertices() > 12) throw SizeError("chromatic polynomials are capped at 12 vertices");
  AdjGraph h{g.num_vertices(), {}};
  for (int v = 0; v < g.num_vertices(); ++v) h.adj.push_back(g.neighbors(v));
  std::unordered_map<std::string, IntPolynomial> memo;
  return deletion_contraction(h, memo);
}

IntPolynomial chromatic_polynomial_whitney(const SimpleGraph& g, const EdgeOrder& ord) {
  IntPolynomial p;
  for (EdgeMask s : nbc_sets(g, ord)) {
    int k = popcount(s);
    p += IntPolynomial::monomial(k % 2 ? -1 : 1, g.num_vertices() - k);
  }
  return p;
}

OrientationCounts orientation_counts_vs_chromatic(const SimpleGraph& g) {
  if (!g.is_connected()) throw PreconditionError("orientation counts need a connected graph");
  OrientationCounts r;
  r.unique_sink.assign(static_cast<std::size_t>(g.num_vertices()), 0);
  for_each_orientation(g.as_multigraph(), [&](const Digraph& o) {
    if (!is_acyclic(o)) return;
    ++r.acyclic_total;
    auto s = sinks(o);
    if (s.size() == 1) ++r.unique_sink[static_cast<std::size_t>(s.front())];
  });
  IntPolynomial p = chromatic_polynomial(g);
  r.p_at_minus_one = std::abs(p(-1));
  r.linear_coefficient = std::abs(p.coeff(1));
  auto all_equal = [&](std::int64_t v) {
    return std::all_of(r.unique_sink.begin(), r.unique_sink.end(), [&](std::int64_t c) { return c == v; });
  };
  r.total_matches_p_minus_one = r.acyclic_total == r.p_at_minus_one;
  r.total_matches_linear = r.acyclic_total == r.linear_coefficient;
  r.unique_sink_matches_linear = all_equal(r.linear_coefficient);
  r.unique_sink_matches_p_minus_one = all_equal(r.p_at_minus_one);
  return r;
}

void require_nbc_base(EdgeMask tree, const SimpleGraph& g, const EdgeOrder& ord) {
  if ((tree & ~g.all_edges()) != 0) throw PreconditionError("edge set refers to edges outside the graph");
  if (popcount(tree) != g.num_vertices() - 1 || g.component_of(0, tree) != g.all_vertices())
    throw PreconditionError("edge set is not a spanning tree");
  if (!is_nbc(tree, broken_circuits(g, ord))) throw PreconditionError("spanning tree contains a broken circuit");
}

namespace {

void check_vertex(const SimpleGraph& g, int x) {
  if (x < 0 || x >= g.num_vertices()) throw PreconditionError("unknown vertex " + std::to_string(x));
}

}  // namespace

Digraph mu_explicit(EdgeMask tree, const SimpleGraph& g, int x, const EdgeOrder& ord) {
  check_vertex(g, x);
  require_nbc_base(tree, g, ord);
  const int n = g.num_vertices();
  std::vector<int> parent(static_cast<std::size_t>(n), -1), parent_edge(static_cast<std::size_t>(n), -1),
      depth(static_cast<std::size_t>(n), 0);
  std::vector<int> queue{x};
  EdgeMask seen = bit(x);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for_each_bit(tree, [&](int e) {
      const Ends& a = g.ends(e);
      if (a.u != v && a.v != v) return;
      int w = a.u == v ? a.v : a.u;
      if ((seen >> w) & 1U) return;
      seen |= bit(w);
      parent[static_cast<std::size_t>(w)] = v;
      parent_edge[static_cast<std::size_t>(w)] = e;
      depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
      queue.push_back(w);
    });
  }
  auto meet = [&](int i, int j) {
    while (depth[static_cast<std::size_t>(i)] > depth[static_cast<std::size_t>(j)]) i = parent[static_cast<std::size_t>(i)];
    while (depth[static_cast<std::size_t>(j)] > depth[static_cast<std::size_t>(i)]) j = parent[static_cast<std::size_t>(j)];
    while (i != j) {
      i = parent[static_cast<std::size_t>(i)];
      j = parent[static_cast<std::size_t>(j)];
    }
    return i;
  };
  // Rank of the largest edge on the path from i up to m; -1 stands for the null edge.
  auto value = [&](int i, int m) {
    int best = -1;
    for (; i != m; i = parent[static_cast<std::size_t>(i)]) best = std::max(best, ord.rank(parent_edge[static_cast<std::size_t>(i)]));
    return best;
  };
  std::vector<Arc> arcs;
  for (const Ends& e : g.edges()) {
    int m = meet(e.u, e.v);
    int vu = value(e.u, m), vv = value(e.v, m);
    // The endpoint with the smaller value comes first in the comparison order and receives the arrow.
    arcs.push_back(vv < vu ? Arc{e.u, e.v} : Arc{e.v, e.u});
  }
  return Digraph(n, std::move(arcs));
}

namespace {

Heap nbc_to_pyramid_rec(EdgeMask S, EdgeMask tree, const SimpleGraph& g, int x, const EdgeOrder& ord) {
  if (S == bit(x)) return Heap::singleton(x, x);
  EdgeMask induced = 0;
  for (int e = 0; e < g.num_edges(); ++e)
    if (((S >> g.ends(e).u) & 1U) && ((S >> g.ends(e).v) & 1U)) induced |= bit(e);
  const int top = ord.max_edge(induced);
  const EdgeMask t = tree & induced;
  if (!((t >> top) & 1U)) throw PreconditionError("tree misses the largest edge of an induced subgraph, so it is not NBC");
  const EdgeMask S2 = g.component_of(x, t & ~bit(top)) & S;
  const EdgeMask S1 = S & ~S2;
  const int u = ((S1 >> g.ends(top).u) & 1U) ? g.ends(top).u : g.ends(top).v;
  return compose(nbc_to_pyramid_rec(S1, tree, g, u, ord), nbc_to_pyramid_rec(S2, tree, g, x, ord), g);
}

EdgeMask pyramid_to_nbc_rec(const Heap& p, const SimpleGraph& g, const EdgeOrder& ord) {
  if (p.size() == 1) return 0;
  EdgeMask S = 0;
  for (int l : p.labels()) S |= bit(l);
  EdgeMask induced = 0;
  for (int e = 0; e < g.num_edges(); ++e)
    if (((S >> g.ends(e).u) & 1U) && ((S >> g.ends(e).v) & 1U)) induced |= bit(e);
  const int top = ord.max_edge(induced);
  int a = p.index_of_label(g.ends(top).u), b = p.index_of_label(g.ends(top).v);
  const int y = p.leq(a, b) ? a : b;
  Heap lower = p.restrict(p.down(y));
  Heap upper = p.restrict(p.all() & ~p.down(y));
  return bit(top) | pyramid_to_nbc_rec(lower, g, ord) | pyramid_to_nbc_rec(upper, g, ord);
}

}  // namespace

Heap nbc_to_pyramid(EdgeMask tree, const SimpleGraph& g, int x, const EdgeOrder& ord) {
  check_vertex(g, x);
  require_nbc_base(tree, g, ord);
  return nbc_to_pyramid_rec(g.all_vertices(), tree, g, x, ord);
}

EdgeMask pyramid_to_nbc(const Heap& p, const SimpleGraph& g, const EdgeOrder& ord) {
  if (!p.is_full(g.num_vertices()) || !p.is_pyramid()) throw PreconditionError("inverse map needs a full pyramid");
  if (ord.size() != g.num_edges()) throw PreconditionError("edge order size differs from the edge count");
  return pyramid_to_nbc_rec(p, g, ord);
}

Digraph phi_recursive(EdgeMask tree, const SimpleGraph& g, int x, const EdgeOrder& ord) {
  return pyramid_to_orientation(nbc_to_pyramid(tree, g, x, ord), g);
}

EdgeMask psi_recursive(const Digraph& o, const SimpleGraph& g, const EdgeOrder& ord) {
  return pyramid_to_nbc(orientation_to_pyramid(o, g), g, ord);
}

}  // namespace circpart
