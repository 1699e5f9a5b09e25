#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace circpart {

// Subsets of edge ids (or vertex ids, or pieces) as 64-bit masks.
using EdgeMask = std::uint64_t;
inline constexpr int kMaxEdges = 64;

inline int popcount(EdgeMask m) { return std::popcount(m); }
inline int lowest_bit(EdgeMask m) { return std::countr_zero(m); }
inline EdgeMask bit(int i) { return EdgeMask{1} << i; }
inline EdgeMask full_mask(int n) { return n >= 64 ? ~EdgeMask{0} : (bit(n) - 1); }

template <class F>
void for_each_bit(EdgeMask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

struct Arc {
  int tail;
  int head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Ends {
  int u;
  int v;
  friend bool operator==(const Ends&, const Ends&) = default;
};

// Original vertex and edge names from an input file, indexed by dense id.
struct LabelTable {
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
};

class Digraph {
 public:
  Digraph() = default;
  Digraph(int num_vertices, std::vector<Arc> arcs, LabelTable labels = {});

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int e) const;
  int tail(int e) const { return arc(e).tail; }
  int head(int e) const { return arc(e).head; }
  EdgeMask all_edges() const { return full_mask(num_edges()); }

  int out_degree(int u) const;
  int in_degree(int u) const;
  int multiplicity(int u, int v) const;
  // Out-arcs of u in ascending edge id.
  const std::vector<int>& out_edges(int u) const;
  // Vertices touched by the edges in mask.
  EdgeMask vertex_support(EdgeMask edges) const;

  const std::string& vertex_label(int v) const { return labels_.vertices.at(static_cast<std::size_t>(v)); }
  const std::string& edge_label(int e) const { return labels_.edges.at(static_cast<std::size_t>(e)); }
  const LabelTable& labels() const { return labels_; }

 private:
  void check_vertex(int u) const;
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<int> indeg_;
  LabelTable labels_;
};

class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int num_vertices, std::vector<Ends> edges, LabelTable labels = {});

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Ends>& edges() const { return edges_; }
  const Ends& ends(int e) const;
  EdgeMask all_edges() const { return full_mask(num_edges()); }

  int degree(int u) const;
  int multiplicity(int u, int v) const;
  const std::vector<int>& incident_edges(int u) const;
  EdgeMask vertex_support(EdgeMask edges) const;

  const std::string& vertex_label(int v) const { return labels_.vertices.at(static_cast<std::size_t>(v)); }
  const std::string& edge_label(int e) const { return labels_.edges.at(static_cast<std::size_t>(e)); }
  const LabelTable& labels() const { return labels_; }

 private:
  int n_ = 0;
  std::vector<Ends> edges_;
  std::vector<std::vector<int>> incident_;
  LabelTable labels_;
};

// Simple loopless graph on at most 64 vertices with adjacency masks.
// Edge e joins ends(e).u < ends(e).v.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(int num_vertices, std::vector<Ends> edges);
  // Rejects parallel edges.
  static SimpleGraph from_multigraph(const Multigraph& x);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Ends>& edges() const { return edges_; }
  const Ends& ends(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  EdgeMask neighbors(int u) const { return adj_.at(static_cast<std::size_t>(u)); }
  bool adjacent(int u, int v) const { return (neighbors(u) >> v) & 1U; }
  // Edge id joining u and v, or -1.
  int edge_between(int u, int v) const;
  EdgeMask all_vertices() const { return full_mask(n_); }
  EdgeMask all_edges() const { return full_mask(num_edges()); }

  // Is the subgraph induced on the vertex set S connected (S nonempty)?
  bool induces_connected(EdgeMask S) const;
  // Vertex set of the component of the spanning subgraph (V, edges) containing v.
  EdgeMask component_of(int v, EdgeMask edges) const;
  bool is_connected() const { return n_ <= 1 || induces_connected(all_vertices()); }

  Multigraph as_multigraph() const;

 private:
  int n_ = 0;
  std::vector<Ends> edges_;
  std::vector<EdgeMask> adj_;
};

bool is_eulerian(const Digraph& d);
// The sub-digraph formed by the edges in mask (touched vertices only).
bool is_eulerian(const Digraph& d, EdgeMask edges);
bool is_edge_connected_support(const Digraph& d, EdgeMask edges);
bool is_edge_connected_support(const Multigraph& x, EdgeMask edges);

// The sub-digraph on the edges of mask, keeping vertex ids; edges are
// renumbered in ascending original order and keep their labels.
Digraph sub_digraph(const Digraph& d, EdgeMask edges);
Multigraph sub_multigraph(const Multigraph& x, EdgeMask edges);
Multigraph underlying_multigraph(const Digraph& d);
// Drops vertices of degree zero, renumbering the rest in order.
Multigraph without_isolated_vertices(const Multigraph& x);

// All 2^|E| orientations: bit e of the counter set means edge e runs v -> u.
void for_each_orientation(const Multigraph& x, const std::function<void(const Digraph&)>& visit);
std::vector<Digraph> orientations(const Multigraph& x);
Digraph orientation_from_bits(const Multigraph& x, EdgeMask reversed);

// Multiplicity data of a digraph or multigraph on a fixed vertex set.
struct ApproxClass {
  int num_vertices = 0;
  bool directed = false;
  // (u,v) -> multiplicity; undirected keys have u < v.
  std::map<std::pair<int, int>, int> multiplicity;
  auto operator<=>(const ApproxClass&) const = default;
  int num_edges() const;
};

ApproxClass approx_class(const Digraph& d);
ApproxClass approx_class(const Multigraph& x);
// A representative with edge ids assigned in ascending key order.
Digraph digraph_of(const ApproxClass& c);
Multigraph multigraph_of(const ApproxClass& c);

bool is_orientation_of(const Digraph& o, const Multigraph& host);
// M_X: product of factorials of parallel-class sizes.
std::int64_t parallel_factorial_product(const Multigraph& x);
// K_D: product over ordered pairs of m(u,v)!.
std::int64_t arc_multiplicity_factorial_product(const Digraph& d);
// N_D: product of deg+(v)!.
std::int64_t out_degree_factorial_product(const Digraph& d);
// |[o]| = M_X / K_O.
std::int64_t approx_class_size(const Digraph& o, const Multigraph& host);

bool is_veblen(const Multigraph& x);

bool is_acyclic(const Digraph& d);
// Vertices with out-degree zero.
std::vector<int> sinks(const Digraph& d);

}  // namespace circpart
