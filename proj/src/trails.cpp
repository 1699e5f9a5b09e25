#include "circpart/trails.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "circpart/error.hpp"
#include "circpart/linalg.hpp"
#include "circpart/polynomial.hpp"

namespace circpart {

EdgeMask Trail::edge_mask() const {
  EdgeMask m = 0;
  for (int e : edges) m |= bit(e);
  return m;
}

EdgeMask Trail::vertex_mask() const {
  EdgeMask m = 0;
  for (int v : vertices) m |= bit(v);
  return m;
}

void validate_trail(const Digraph& d, const Trail& w) {
  if (w.vertices.size() != w.edges.size() + 1) throw PreconditionError("trail vertex and edge counts are inconsistent");
  EdgeMask used = 0;
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    const Arc& a = d.arc(w.edges[i]);
    if (a.tail != w.vertices[i] || a.head != w.vertices[i + 1])
      throw PreconditionError("edge " + d.edge_label(w.edges[i]) + " is not incident as listed in the trail");
    if (used & bit(w.edges[i])) throw PreconditionError("edge " + d.edge_label(w.edges[i]) + " repeats in the trail");
    used |= bit(w.edges[i]);
  }
}

namespace {

// Backtracking over out-arcs in ascending id; `last` (or -1) is reserved
// for the final step. Calls visit on each completed closed trail.
void closed_trails(const Digraph& d, EdgeMask edges, int start, int last, const std::function<void(const Trail&)>& visit) {
  const int total = popcount(edges);
  Trail w;
  w.vertices.push_back(start);
  EdgeMask used = 0;
  std::function<void(int)> rec = [&](int v) {
    if (w.length() == total) {
      if (v == start) visit(w);
      return;
    }
    if (last >= 0 && w.length() == total - 1) {
      if (v == d.tail(last)) {
        w.edges.push_back(last);
        w.vertices.push_back(d.head(last));
        visit(w);
        w.edges.pop_back();
        w.vertices.pop_back();
      }
      return;
    }
    for (int e : d.out_edges(v)) {
      if (!((edges >> e) & 1U) || (used & bit(e)) || e == last) continue;
      used |= bit(e);
      w.edges.push_back(e);
      w.vertices.push_back(d.head(e));
      rec(d.head(e));
      w.edges.pop_back();
      w.vertices.pop_back();
      used &= ~bit(e);
    }
  };
  rec(start);
}

}  // namespace

std::vector<Trail> eulerian_trails_ending_at(const Digraph& d, int e) {
  d.arc(e);
  std::vector<Trail> out;
  if (!is_eulerian(d)) return out;
  closed_trails(d, d.all_edges(), d.head(e), e, [&](const Trail& w) { out.push_back(w); });
  return out;
}

std::vector<Trail> eulerian_trails_from(const Digraph& d, int u) {
  d.out_degree(u);
  std::vector<Trail> out;
  if (!is_eulerian(d) || d.out_degree(u) == 0) return out;
  closed_trails(d, d.all_edges(), u, -1, [&](const Trail& w) { out.push_back(w); });
  return out;
}

Circuit canonical_circuit(const Trail& closed) {
  if (!closed.closed()) throw PreconditionError("circuit needs a closed trail");
  const std::size_t n = closed.edges.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      int a = closed.edges[(r + i) % n], b = closed.edges[(best + i) % n];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  Circuit c;
  for (std::size_t i = 0; i < n; ++i) {
    c.trail.edges.push_back(closed.edges[(best + i) % n]);
    c.trail.vertices.push_back(closed.vertices[(best + i) % n]);
  }
  c.trail.vertices.push_back(c.trail.vertices.empty() ? closed.vertices.front() : c.trail.vertices.front());
  return c;
}

std::vector<Circuit> eulerian_circuits(const Digraph& d) {
  std::vector<Circuit> out;
  if (!is_eulerian(d)) return out;
  for (const Trail& w : eulerian_trails_ending_at(d, 0)) out.push_back(canonical_circuit(w));
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t count_eulerian_circuits(const Digraph& d, EdgeMask edges) {
  if (!is_eulerian(d, edges)) return 0;
  int last = lowest_bit(edges);
  std::int64_t count = 0;
  closed_trails(d, edges, d.head(last), last, [&](const Trail&) { ++count; });
  return count;
}


std::int64_t count_circuits_best(const Digraph& d, EdgeMask edges) {
  if (!is_eulerian(d, edges)) throw PreconditionError("BEST count requires a connected Eulerian digraph");
  std::vector<int> verts;
  std::vector<int> index(static_cast<std::size_t>(d.num_vertices()), -1);
  for_each_bit(d.vertex_support(edges), [&](int v) {
    index[static_cast<std::size_t>(v)] = static_cast<int>(verts.size());
    verts.push_back(v);
  });
  const std::size_t n = verts.size();
  std::vector<std::vector<std::int64_t>> lap(n, std::vector<std::int64_t>(n, 0));
  std::vector<int> outdeg(n, 0);
  for_each_bit(edges, [&](int e) {
    auto t = static_cast<std::size_t>(index[static_cast<std::size_t>(d.tail(e))]);
    auto h = static_cast<std::size_t>(index[static_cast<std::size_t>(d.head(e))]);
    lap[t][t] += 1;
    lap[t][h] -= 1;
    ++outdeg[t];
  });
  // Arborescences converging on the first vertex: delete its row and column.
  std::vector<std::vector<std::int64_t>> minor;
  for (std::size_t i = 1; i < n; ++i) minor.emplace_back(lap[i].begin() + 1, lap[i].end());
  std::int64_t result = integer_determinant(minor);
  for (int deg : outdeg) result = checked_mul(result, factorial(deg - 1));
  return result;
}

std::int64_t count_circuits_best(const Digraph& d) { return count_circuits_best(d, d.all_edges()); }

CycleSeq cycle_sequence(const Trail& w) {
  if (!w.closed()) throw PreconditionError("cycle sequence requires a closed trail");
  if (w.vertices.size() != w.edges.size() + 1) throw PreconditionError("trail vertex and edge counts are inconsistent");
  CycleSeq cs;
  Trail cur = w;
  while (cur.length() > 0) {
    std::vector<int> seen_at(64, -1);
    std::size_t i = 0, j = 0;
    for (j = 0; j < cur.vertices.size(); ++j) {
      int v = cur.vertices[j];
      if (seen_at[static_cast<std::size_t>(v)] >= 0) {
        i = static_cast<std::size_t>(seen_at[static_cast<std::size_t>(v)]);
        break;
      }
      seen_at[static_cast<std::size_t>(v)] = static_cast<int>(j);
    }
    Trail cycle, rest;
    cycle.vertices.assign(cur.vertices.begin() + static_cast<long>(i), cur.vertices.begin() + static_cast<long>(j) + 1);
    cycle.edges.assign(cur.edges.begin() + static_cast<long>(i), cur.edges.begin() + static_cast<long>(j));
    rest.vertices.assign(cur.vertices.begin(), cur.vertices.begin() + static_cast<long>(i) + 1);
    rest.vertices.insert(rest.vertices.end(), cur.vertices.begin() + static_cast<long>(j) + 1, cur.vertices.end());
    rest.edges.assign(cur.edges.begin(), cur.edges.begin() + static_cast<long>(i));
    rest.edges.insert(rest.edges.end(), cur.edges.begin() + static_cast<long>(j), cur.edges.end());
    cs.cycles.push_back(std::move(cycle));
    cur = std::move(rest);
  }
  return cs;
}

Trail insert_trail(const Trail& inner, const Trail& outer) {
  if (!inner.closed()) throw PreconditionError("insertion: inner trail is not closed");
  if (!outer.closed()) throw PreconditionError("insertion: outer trail is not closed");
  if (inner.edge_mask() & outer.edge_mask()) throw PreconditionError("insertion: trails share an edge");
  const int base = inner.vertices.front();
  const EdgeMask inner_vertices = inner.vertex_mask();
  std::size_t j = 0;
  while (j < outer.vertices.size() && !((inner_vertices >> outer.vertices[j]) & 1U)) ++j;
  if (j == outer.vertices.size()) throw PreconditionError("insertion: base vertex of inner trail does not occur in outer trail");
  if (outer.vertices[j] != base)
    throw PreconditionError("insertion: first-occurrence clause fails, outer trail meets the inner trail before its base vertex");
  Trail r;
  r.vertices.assign(outer.vertices.begin(), outer.vertices.begin() + static_cast<long>(j) + 1);
  r.vertices.insert(r.vertices.end(), inner.vertices.begin() + 1, inner.vertices.end());
  r.vertices.insert(r.vertices.end(), outer.vertices.begin() + static_cast<long>(j) + 1, outer.vertices.end());
  r.edges.assign(outer.edges.begin(), outer.edges.begin() + static_cast<long>(j));
  r.edges.insert(r.edges.end(), inner.edges.begin(), inner.edges.end());
  r.edges.insert(r.edges.end(), outer.edges.begin() + static_cast<long>(j), outer.edges.end());
  return r;
}

Trail reassemble(const CycleSeq& cs) {
  if (cs.cycles.empty()) throw PreconditionError("empty cycle sequence");
  Trail cur = cs.cycles.back();
  for (std::size_t k = cs.cycles.size() - 1; k-- > 0;) cur = insert_trail(cs.cycles[k], cur);
  return cur;
}

SetPartition cycle_partition(const CycleSeq& cs, int num_edges) {
  std::vector<EdgeMask> blocks;
  for (const Trail& c : cs.cycles) blocks.push_back(c.edge_mask());
  return SetPartition(num_edges, std::move(blocks));
}

bool is_directed_cycle(const Digraph& d, EdgeMask edges) {
  if (!is_eulerian(d, edges)) return false;
  std::vector<int> out(static_cast<std::size_t>(d.num_vertices()), 0);
  bool ok = true;
  for_each_bit(edges, [&](int e) { ok = ok && ++out[static_cast<std::size_t>(d.tail(e))] == 1; });
  return ok;
}

std::vector<Trail> trails_with_cycle_partition(const Digraph& d, int e, const SetPartition& a) {
  if (a.ground_size() != d.num_edges()) throw PreconditionError("partition ground set differs from the edge set");
  for (EdgeMask b : a.blocks())
    if (!is_directed_cycle(d, b)) throw PreconditionError("partition has a block that is not a directed cycle");
  std::vector<Trail> out;
  for (const Trail& w : eulerian_trails_ending_at(d, e))
    if (cycle_partition(cycle_sequence(w), d.num_edges()) == a) out.push_back(w);
  return out;
}

std::int64_t count_undirected_eulerian_circuits(const Multigraph& x) {
  if (!is_veblen(x) || !is_edge_connected_support(x, x.all_edges())) return 0;
  const int total = x.num_edges();
  std::int64_t count = 0;
  const int last = 0;
  EdgeMask used = bit(last);
  int steps = 0;
  // Traverse edge 0 last in each of its two directions.
  for (int dir = 0; dir < 2; ++dir) {
    const int from = dir ? x.ends(last).v : x.ends(last).u;
    const int to = dir ? x.ends(last).u : x.ends(last).v;
    std::function<void(int)> rec = [&](int v) {
      if (steps == total - 1) {
        count += v == from;
        return;
      }
      for (int e : x.incident_edges(v)) {
        if (used & bit(e)) continue;
        int w = x.ends(e).u == v ? x.ends(e).v : x.ends(e).u;
        used |= bit(e);
        ++steps;
        rec(w);
        --steps;
        used &= ~bit(e);
      }
    };
    rec(to);
  }
  return count;
}

}  // namespace circpart
