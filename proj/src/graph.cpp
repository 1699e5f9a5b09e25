#include "circpart/graph.hpp"

#include <algorithm>
#include <string>

#include "circpart/error.hpp"
#include "circpart/polynomial.hpp"

namespace circpart {

namespace {

LabelTable fill_labels(LabelTable labels, int n, int m) {
  if (labels.vertices.empty())
    for (int v = 0; v < n; ++v) labels.vertices.push_back(std::to_string(v + 1));
  if (labels.edges.empty())
    for (int e = 0; e < m; ++e) labels.edges.push_back("e" + std::to_string(e + 1));
  if (static_cast<int>(labels.vertices.size()) != n || static_cast<int>(labels.edges.size()) != m)
    throw PreconditionError("label table size does not match the graph");
  return labels;
}

// Connectivity of the edge-support via union-find over endpoints.
template <class EndsOf>
bool support_connected(int n, EdgeMask edges, EndsOf ends_of) {
  if (edges == 0) return false;
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  EdgeMask touched = 0;
  for_each_bit(edges, [&](int e) {
    auto [a, b] = ends_of(e);
    touched |= bit(a) | bit(b);
    parent[static_cast<std::size_t>(find(a))] = find(b);
  });
  int root = find(lowest_bit(touched));
  bool ok = true;
  for_each_bit(touched, [&](int v) { ok = ok && find(v) == root; });
  return ok;
}

}  // namespace

Digraph::Digraph(int num_vertices, std::vector<Arc> arcs, LabelTable labels)
    : n_(num_vertices), arcs_(std::move(arcs)) {
  if (n_ < 0 || n_ > 64) throw SizeError("vertex count must lie in [0, 64]");
  if (num_edges() > kMaxEdges) throw SizeError("at most 64 edges are supported");
  out_.assign(static_cast<std::size_t>(n_), {});
  indeg_.assign(static_cast<std::size_t>(n_), 0);
  for (int e = 0; e < num_edges(); ++e) {
    const Arc& a = arcs_[static_cast<std::size_t>(e)];
    if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
      throw PreconditionError("arc " + std::to_string(e) + " has an endpoint outside the vertex set");
    if (a.tail == a.head) throw PreconditionError("arc " + std::to_string(e) + " is a loop");
    out_[static_cast<std::size_t>(a.tail)].push_back(e);
    ++indeg_[static_cast<std::size_t>(a.head)];
  }
  labels_ = fill_labels(std::move(labels), n_, num_edges());
}

void Digraph::check_vertex(int u) const {
  if (u < 0 || u >= n_) throw PreconditionError("unknown vertex " + std::to_string(u));
}

const Arc& Digraph::arc(int e) const {
  if (e < 0 || e >= num_edges()) throw PreconditionError("unknown edge " + std::to_string(e));
  return arcs_[static_cast<std::size_t>(e)];
}

int Digraph::out_degree(int u) const {
  check_vertex(u);
  return static_cast<int>(out_[static_cast<std::size_t>(u)].size());
}

int Digraph::in_degree(int u) const {
  check_vertex(u);
  return indeg_[static_cast<std::size_t>(u)];
}

int Digraph::multiplicity(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  int m = 0;
  for (int e : out_[static_cast<std::size_t>(u)]) m += arcs_[static_cast<std::size_t>(e)].head == v;
  return m;
}

const std::vector<int>& Digraph::out_edges(int u) const {
  check_vertex(u);
  return out_[static_cast<std::size_t>(u)];
}

EdgeMask Digraph::vertex_support(EdgeMask edges) const {
  EdgeMask s = 0;
  for_each_bit(edges, [&](int e) { s |= bit(tail(e)) | bit(head(e)); });
  return s;
}

Multigraph::Multigraph(int num_vertices, std::vector<Ends> edges, LabelTable labels)
    : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ < 0 || n_ > 64) throw SizeError("vertex count must lie in [0, 64]");
  if (num_edges() > kMaxEdges) throw SizeError("at most 64 edges are supported");
  incident_.assign(static_cast<std::size_t>(n_), {});
  for (int e = 0; e < num_edges(); ++e) {
    const Ends& a = edges_[static_cast<std::size_t>(e)];
    if (a.u < 0 || a.u >= n_ || a.v < 0 || a.v >= n_)
      throw PreconditionError("edge " + std::to_string(e) + " has an endpoint outside the vertex set");
    if (a.u == a.v) throw PreconditionError("edge " + std::to_string(e) + " is a loop");
    incident_[static_cast<std::size_t>(a.u)].push_back(e);
    incident_[static_cast<std::size_t>(a.v)].push_back(e);
  }
  labels_ = fill_labels(std::move(labels), n_, num_edges());
}

const Ends& Multigraph::ends(int e) const {
  if (e < 0 || e >= num_edges()) throw PreconditionError("unknown edge " + std::to_string(e));
  return edges_[static_cast<std::size_t>(e)];
}

int Multigraph::degree(int u) const { return static_cast<int>(incident_edges(u).size()); }

int Multigraph::multiplicity(int u, int v) const {
  int m = 0;
  for (int e : incident_edges(u)) {
    const Ends& a = edges_[static_cast<std::size_t>(e)];
    m += (a.u == u && a.v == v) || (a.u == v && a.v == u);
  }
  return m;
}

const std::vector<int>& Multigraph::incident_edges(int u) const {
  if (u < 0 || u >= n_) throw PreconditionError("unknown vertex " + std::to_string(u));
  return incident_[static_cast<std::size_t>(u)];
}

EdgeMask Multigraph::vertex_support(EdgeMask edges) const {
  EdgeMask s = 0;
  for_each_bit(edges, [&](int e) { s |= bit(ends(e).u) | bit(ends(e).v); });
  return s;
}

SimpleGraph::SimpleGraph(int num_vertices, std::vector<Ends> edges) : n_(num_vertices) {
  if (n_ < 0 || n_ > 64) throw SizeError("vertex count must lie in [0, 64]");
  if (edges.size() > static_cast<std::size_t>(kMaxEdges)) throw SizeError("at most 64 edges are supported");
  adj_.assign(static_cast<std::size_t>(n_), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw PreconditionError("edge endpoint outside the vertex set");
    if (u == v) throw PreconditionError("simple graph cannot have loops");
    if (u > v) std::swap(u, v);
    if (adjacent(u, v)) throw PreconditionError("simple graph cannot have parallel edges");
    adj_[static_cast<std::size_t>(u)] |= bit(v);
    adj_[static_cast<std::size_t>(v)] |= bit(u);
    edges_.push_back({u, v});
  }
}

SimpleGraph SimpleGraph::from_multigraph(const Multigraph& x) { return SimpleGraph(x.num_vertices(), x.edges()); }

int SimpleGraph::edge_between(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || !adjacent(u, v)) return -1;
  if (u > v) std::swap(u, v);
  for (int e = 0; e < num_edges(); ++e)
    if (edges_[static_cast<std::size_t>(e)] == Ends{u, v}) return e;
  return -1;
}

bool SimpleGraph::induces_connected(EdgeMask S) const {
  if (S == 0) return false;
  EdgeMask seen = bit(lowest_bit(S));
  EdgeMask frontier = seen;
  while (frontier) {
    EdgeMask next = 0;
    for_each_bit(frontier, [&](int v) { next |= neighbors(v); });
    next &= S & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == S;
}

EdgeMask SimpleGraph::component_of(int v, EdgeMask edges) const {
  EdgeMask seen = bit(v);
  bool grew = true;
  while (grew) {
    grew = false;
    for_each_bit(edges, [&](int e) {
      const Ends& a = ends(e);
      bool iu = (seen >> a.u) & 1U, iv = (seen >> a.v) & 1U;
      if (iu != iv) {
        seen |= bit(a.u) | bit(a.v);
        grew = true;
      }
    });
  }
  return seen;
}

Multigraph SimpleGraph::as_multigraph() const { return Multigraph(n_, edges_); }

bool is_edge_connected_support(const Digraph& d, EdgeMask edges) {
  return support_connected(d.num_vertices(), edges, [&](int e) { return std::pair{d.tail(e), d.head(e)}; });
}

bool is_edge_connected_support(const Multigraph& x, EdgeMask edges) {
  return support_connected(x.num_vertices(), edges, [&](int e) { return std::pair{x.ends(e).u, x.ends(e).v}; });
}

bool is_eulerian(const Digraph& d, EdgeMask edges) {
  if (!is_edge_connected_support(d, edges)) return false;
  std::vector<int> balance(static_cast<std::size_t>(d.num_vertices()), 0);
  for_each_bit(edges, [&](int e) {
    ++balance[static_cast<std::size_t>(d.tail(e))];
    --balance[static_cast<std::size_t>(d.head(e))];
  });
  return std::all_of(balance.begin(), balance.end(), [](int b) { return b == 0; });
}

bool is_eulerian(const Digraph& d) { return is_eulerian(d, d.all_edges()); }

Digraph sub_digraph(const Digraph& d, EdgeMask edges) {
  std::vector<Arc> arcs;
  LabelTable labels;
  labels.vertices = d.labels().vertices;
  for_each_bit(edges, [&](int e) {
    arcs.push_back(d.arc(e));
    labels.edges.push_back(d.edge_label(e));
  });
  return Digraph(d.num_vertices(), std::move(arcs), std::move(labels));
}

Multigraph sub_multigraph(const Multigraph& x, EdgeMask edges) {
  std::vector<Ends> es;
  LabelTable labels;
  labels.vertices = x.labels().vertices;
  for_each_bit(edges, [&](int e) {
    es.push_back(x.ends(e));
    labels.edges.push_back(x.edge_label(e));
  });
  return Multigraph(x.num_vertices(), std::move(es), std::move(labels));
}

Multigraph underlying_multigraph(const Digraph& d) {
  std::vector<Ends> es;
  for (const Arc& a : d.arcs()) es.push_back({a.tail, a.head});
  return Multigraph(d.num_vertices(), std::move(es), d.labels());
}

Multigraph without_isolated_vertices(const Multigraph& x) {
  std::vector<int> index(static_cast<std::size_t>(x.num_vertices()), -1);
  LabelTable labels;
  int n = 0;
  for (int v = 0; v < x.num_vertices(); ++v)
    if (x.degree(v) > 0) {
      index[static_cast<std::size_t>(v)] = n++;
      labels.vertices.push_back(x.vertex_label(v));
    }
  std::vector<Ends> es;
  for (const Ends& a : x.edges()) es.push_back({index[static_cast<std::size_t>(a.u)], index[static_cast<std::size_t>(a.v)]});
  labels.edges = x.labels().edges;
  return Multigraph(n, std::move(es), std::move(labels));
}

Digraph orientation_from_bits(const Multigraph& x, EdgeMask reversed) {
  std::vector<Arc> arcs;
  for (int e = 0; e < x.num_edges(); ++e) {
    const Ends& a = x.ends(e);
    arcs.push_back(((reversed >> e) & 1U) ? Arc{a.v, a.u} : Arc{a.u, a.v});
  }
  return Digraph(x.num_vertices(), std::move(arcs), x.labels());
}

void for_each_orientation(const Multigraph& x, const std::function<void(const Digraph&)>& visit) {
  if (x.num_edges() > 30) throw SizeError("orientation enumeration is capped at 30 edges");
  const EdgeMask count = bit(x.num_edges());
  for (EdgeMask r = 0; r < count; ++r) visit(orientation_from_bits(x, r));
}

std::vector<Digraph> orientations(const Multigraph& x) {
  std::vector<Digraph> out;
  for_each_orientation(x, [&](const Digraph& d) { out.push_back(d); });
  return out;
}

int ApproxClass::num_edges() const {
  int m = 0;
  for (const auto& [k, c] : multiplicity) m += c;
  return m;
}

ApproxClass approx_class(const Digraph& d) {
  ApproxClass c{d.num_vertices(), true, {}};
  for (const Arc& a : d.arcs()) ++c.multiplicity[{a.tail, a.head}];
  return c;
}

ApproxClass approx_class(const Multigraph& x) {
  ApproxClass c{x.num_vertices(), false, {}};
  for (const Ends& a : x.edges()) ++c.multiplicity[{std::min(a.u, a.v), std::max(a.u, a.v)}];
  return c;
}

Digraph digraph_of(const ApproxClass& c) {
  if (!c.directed) throw PreconditionError("class is undirected");
  std::vector<Arc> arcs;
  for (const auto& [k, m] : c.multiplicity)
    for (int i = 0; i < m; ++i) arcs.push_back({k.first, k.second});
  return Digraph(c.num_vertices, std::move(arcs));
}

Multigraph multigraph_of(const ApproxClass& c) {
  if (c.directed) throw PreconditionError("class is directed");
  std::vector<Ends> es;
  for (const auto& [k, m] : c.multiplicity)
    for (int i = 0; i < m; ++i) es.push_back({k.first, k.second});
  return Multigraph(c.num_vertices, std::move(es));
}

bool is_orientation_of(const Digraph& o, const Multigraph& host) {
  if (o.num_vertices() != host.num_vertices() || o.num_edges() != host.num_edges()) return false;
  for (int e = 0; e < o.num_edges(); ++e) {
    const Arc& a = o.arc(e);
    const Ends& b = host.ends(e);
    if (!((a.tail == b.u && a.head == b.v) || (a.tail == b.v && a.head == b.u))) return false;
  }
  return true;
}

std::int64_t parallel_factorial_product(const Multigraph& x) {
  std::int64_t r = 1;
  for (const auto& [k, m] : approx_class(x).multiplicity) r = checked_mul(r, factorial(m));
  return r;
}

std::int64_t arc_multiplicity_factorial_product(const Digraph& d) {
  std::int64_t r = 1;
  for (const auto& [k, m] : approx_class(d).multiplicity) r = checked_mul(r, factorial(m));
  return r;
}

std::int64_t out_degree_factorial_product(const Digraph& d) {
  std::int64_t r = 1;
  for (int v = 0; v < d.num_vertices(); ++v) r = checked_mul(r, factorial(d.out_degree(v)));
  return r;
}

std::int64_t approx_class_size(const Digraph& o, const Multigraph& host) {
  if (!is_orientation_of(o, host)) throw PreconditionError("digraph is not an orientation of the host multigraph");
  return parallel_factorial_product(host) / arc_multiplicity_factorial_product(o);
}

bool is_veblen(const Multigraph& x) {
  for (int v = 0; v < x.num_vertices(); ++v)
    if (x.degree(v) % 2 != 0) return false;
  return true;
}


bool is_acyclic(const Digraph& d) {
  std::vector<int> indeg(static_cast<std::size_t>(d.num_vertices()), 0);
  for (const Arc& a : d.arcs()) ++indeg[static_cast<std::size_t>(a.head)];
  std::vector<int> stack;
  for (int v = 0; v < d.num_vertices(); ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int e : d.out_edges(v))
      if (--indeg[static_cast<std::size_t>(d.head(e))] == 0) stack.push_back(d.head(e));
  }
  return seen == d.num_vertices();
}

std::vector<int> sinks(const Digraph& d) {
  std::vector<int> out;
  for (int v = 0; v < d.num_vertices(); ++v)
    if (d.out_degree(v) == 0) out.push_back(v);
  return out;
}

}  // namespace circpart
