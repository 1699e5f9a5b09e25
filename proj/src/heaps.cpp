#include "circpart/heaps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "circpart/error.hpp"
#include "circpart/polynomial.hpp"

namespace circpart {

Heap::Heap(std::vector<int> ids, std::vector<int> labels, const std::vector<std::pair<int, int>>& le) {
  const std::size_t n = ids.size();
  if (labels.size() != n) throw PreconditionError("heap ids and labels differ in length");
  if (n > 64) throw SizeError("heaps are capped at 64 elements");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return ids[a] < ids[b]; });
  std::vector<int> where(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k && ids[perm[k]] == ids[perm[k - 1]]) throw PreconditionError("heap element ids repeat");
    where[perm[k]] = static_cast<int>(k);
    ids_.push_back(ids[perm[k]]);
    labels_.push_back(labels[perm[k]]);
  }
  down_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) down_[i] = bit(static_cast<int>(i));
  for (auto [a, b] : le) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      throw PreconditionError("heap relation refers to an unknown element");
    down_[static_cast<std::size_t>(where[static_cast<std::size_t>(b)])] |= bit(where[static_cast<std::size_t>(a)]);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if ((down_[i] >> k) & 1U) down_[i] |= down_[k];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (((down_[i] >> j) & 1U) && ((down_[j] >> i) & 1U)) throw PreconditionError("heap relation has a cycle");
}

Heap Heap::singleton(int id, int label) { return Heap({id}, {label}, {}); }

int Heap::index_of(int id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) throw PreconditionError("unknown heap element " + std::to_string(id));
  return static_cast<int>(it - ids_.begin());
}

int Heap::index_of_label(int label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  return -1;
}

std::vector<std::pair<int, int>> Heap::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < size(); ++j) {
    EdgeMask strictly_below = down(j) & ~bit(j);
    for_each_bit(strictly_below, [&](int i) {
      // i is covered by j when no z lies strictly between.
      EdgeMask between = strictly_below & ~down(i);
      bool cover = true;
      for_each_bit(between, [&](int z) { cover = cover && !((down(z) >> i) & 1U); });
      if (cover) out.emplace_back(i, j);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Heap::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool maximal = true;
    for (int j = 0; j < size(); ++j) maximal = maximal && (i == j || !leq(i, j));
    if (maximal) out.push_back(i);
  }
  return out;
}

bool Heap::is_full(int num_pieces) const {
  if (size() != num_pieces) return false;
  EdgeMask seen = 0;
  for (int l : labels_) {
    if (l < 0 || l >= num_pieces || ((seen >> l) & 1U)) return false;
    seen |= bit(l);
  }
  return true;
}

Heap Heap::restrict(EdgeMask elements) const {
  std::vector<int> ids, labels, index;
  for_each_bit(elements, [&](int i) {
    ids.push_back(id(i));
    labels.push_back(label(i));
    index.push_back(i);
  });
  std::vector<std::pair<int, int>> le;
  for (std::size_t a = 0; a < index.size(); ++a)
    for (std::size_t b = 0; b < index.size(); ++b)
      if (a != b && leq(index[a], index[b])) le.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return Heap(std::move(ids), std::move(labels), le);
}

namespace {

void check_labels(const Heap& h, const PieceSystem& ps) {
  for (int l : h.labels())
    if (l < 0 || l >= ps.num_vertices()) throw PreconditionError("heap label " + std::to_string(l) + " is not a piece");
}

}  // namespace

HeapCheck is_heap(const Heap& h, const PieceSystem& ps) {
  check_labels(h, ps);
  for (int i = 0; i < h.size(); ++i)
    for (int j = i + 1; j < h.size(); ++j)
      if (concurrent(ps, h.label(i), h.label(j)) && !h.leq(i, j) && !h.leq(j, i))
        return {false, "elements " + std::to_string(h.id(i)) + " and " + std::to_string(h.id(j)) +
                           " have concurrent labels but are incomparable"};
  for (auto [i, j] : h.covers())
    if (!concurrent(ps, h.label(i), h.label(j)))
      return {false, "element " + std::to_string(h.id(j)) + " covers " + std::to_string(h.id(i)) +
                         " but their labels are not concurrent"};
  return {};
}

bool is_heap_sandwich(const Heap& h, const PieceSystem& ps) {
  check_labels(h, ps);
  const int n = h.size();
  // Hasse graph via transitive reduction: i -> j kept unless some path of length 2 exists.
  std::vector<EdgeMask> hasse(static_cast<std::size_t>(n), 0), comparable(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    EdgeMask below = h.down(j) & ~bit(j);
    EdgeMask reach2 = 0;
    for_each_bit(below, [&](int z) { reach2 |= h.down(z) & ~bit(z); });
    hasse[static_cast<std::size_t>(j)] = below & ~reach2;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (h.leq(i, j) || h.leq(j, i)) comparable[static_cast<std::size_t>(i)] |= bit(j);
  for (int j = 0; j < n; ++j) {
    bool ok = true;
    for_each_bit(hasse[static_cast<std::size_t>(j)], [&](int i) { ok = ok && concurrent(ps, h.label(i), h.label(j)); });
    if (!ok) return false;
    EdgeMask incomparable = h.all() & ~comparable[static_cast<std::size_t>(j)];
    for_each_bit(incomparable, [&](int i) { ok = ok && !concurrent(ps, h.label(i), h.label(j)); });
    if (!ok) return false;
  }
  return true;
}

Heap compose(const Heap& h1, const Heap& h2, const PieceSystem& ps) {
  check_labels(h1, ps);
  check_labels(h2, ps);
  std::vector<int> ids = h1.ids(), labels = h1.labels();
  ids.insert(ids.end(), h2.ids().begin(), h2.ids().end());
  labels.insert(labels.end(), h2.labels().begin(), h2.labels().end());
  std::vector<int> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("composition requires disjoint element sets");
  const int n1 = h1.size();
  std::vector<std::pair<int, int>> le;
  for (int j = 0; j < n1; ++j)
    for_each_bit(h1.down(j), [&](int i) { le.emplace_back(i, j); });
  for (int j = 0; j < h2.size(); ++j)
    for_each_bit(h2.down(j), [&](int i) { le.emplace_back(n1 + i, n1 + j); });
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < h2.size(); ++j)
      if (concurrent(ps, h1.label(i), h2.label(j))) le.emplace_back(i, n1 + j);
  return Heap(std::move(ids), std::move(labels), le);
}

std::pair<Heap, Heap> push_down(const Heap& h, int w) {
  if (w < 0 || w >= h.size()) throw PreconditionError("push-down element is not in the heap");
  auto maxima = h.maximal_elements();
  if (std::find(maxima.begin(), maxima.end(), w) == maxima.end())
    throw PreconditionError("push-down element is not maximal");
  return {h.restrict(h.down(w)), h.restrict(h.all() & ~h.down(w))};
}

namespace {

class PyramidEnumerator {
 public:
  explicit PyramidEnumerator(const PieceSystem& ps) : ps_(ps) {}

  const std::vector<Heap>& pyramids(EdgeMask S, int x) {
    auto key = std::make_pair(S, x);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Heap> out;
    if (S == bit(x)) {
      out.push_back(Heap::singleton(x, x));
    } else if (ps_.induces_connected(S)) {
      const int b1 = lowest_bit(ps_.neighbors(x) & S);
      for_each_bipartition(S, b1, x, [&](EdgeMask S1, EdgeMask S2) {
        const std::vector<Heap>& lower = pyramids(S1, b1);
        const std::vector<Heap>& upper = pyramids(S2, x);
        for (const Heap& p1 : lower)
          for (const Heap& p2 : upper) out.push_back(compose(p1, p2, ps_));
      });
      std::sort(out.begin(), out.end());
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  std::int64_t count(EdgeMask S, int x) {
    auto key = std::make_pair(S, x);
    auto it = counts_.find(key);
    if (it != counts_.end()) return it->second;
    std::int64_t c = 0;
    if (S == bit(x)) {
      c = 1;
    } else if (ps_.induces_connected(S)) {
      const int b1 = lowest_bit(ps_.neighbors(x) & S);
      for_each_bipartition(S, b1, x, [&](EdgeMask S1, EdgeMask S2) { c = checked_add(c, checked_mul(count(S1, b1), count(S2, x))); });
    }
    counts_[key] = c;
    return c;
  }

  // Bipartitions {S1 containing b1, S2 containing x} with both sides connected.
  template <class F>
  void for_each_bipartition(EdgeMask S, int b1, int x, F&& f) const {
    const EdgeMask rest = S & ~bit(b1) & ~bit(x);
    EdgeMask sub = rest;
    while (true) {
      EdgeMask S1 = sub | bit(b1);
      EdgeMask S2 = S & ~S1;
      if (ps_.induces_connected(S1) && ps_.induces_connected(S2)) f(S1, S2);
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
  }

 private:
  const PieceSystem& ps_;
  std::map<std::pair<EdgeMask, int>, std::vector<Heap>> memo_;
  std::map<std::pair<EdgeMask, int>, std::int64_t> counts_;
};

void check_piece(const PieceSystem& ps, int beta) {
  if (beta < 0 || beta >= ps.num_vertices()) throw PreconditionError("unknown piece " + std::to_string(beta));
}

}  // namespace

std::vector<Heap> full_pyramids(const PieceSystem& ps, int beta) {
  check_piece(ps, beta);
  if (!ps.is_connected()) return {};
  PyramidEnumerator en(ps);
  return en.pyramids(ps.all_vertices(), beta);
}

std::int64_t count_full_pyramids(const PieceSystem& ps, EdgeMask S, int beta) {
  check_piece(ps, beta);
  if (!((S >> beta) & 1U)) throw PreconditionError("apex piece lies outside the piece subset");
  PyramidEnumerator en(ps);
  return en.count(S, beta);
}

std::vector<Digraph> unique_sink_orientations(const SimpleGraph& g, int x) {
  check_piece(g, x);
  if (g.num_edges() > 30) throw SizeError("orientation enumeration is capped at 30 edges");
  std::vector<Digraph> out;
  for_each_orientation(g.as_multigraph(), [&](const Digraph& o) {
    auto s = sinks(o);
    if (s.size() == 1 && s.front() == x && is_acyclic(o)) out.push_back(o);
  });
  return out;
}

std::int64_t count_acyclic_orientations(const SimpleGraph& g) {
  std::int64_t c = 0;
  for_each_orientation(g.as_multigraph(), [&](const Digraph& o) { c += is_acyclic(o); });
  return c;
}

PyramidRecursionReport pyramid_recursion_check(const PieceSystem& ps, int b1, int b2) {
  check_piece(ps, b1);
  check_piece(ps, b2);
  if (b1 == b2 || !ps.adjacent(b1, b2)) throw PreconditionError("pyramid recursion needs two distinct concurrent pieces");
  if (!ps.is_connected()) throw PreconditionError("pyramid recursion needs a connected piece system");
  PyramidRecursionReport r;
  r.lhs = static_cast<std::int64_t>(unique_sink_orientations(ps, b2).size());
  PyramidEnumerator en(ps);
  en.for_each_bipartition(ps.all_vertices(), b1, b2, [&](EdgeMask S1, EdgeMask S2) {
    ++r.bipartitions;
    r.rhs += en.count(S1, b1) * en.count(S2, b2);
  });
  r.holds = r.lhs == r.rhs;
  return r;
}

Digraph pyramid_to_orientation(const Heap& p, const PieceSystem& ps) {
  if (!p.is_full(ps.num_vertices()) || !p.is_pyramid()) throw PreconditionError("orientation needs a full pyramid");
  std::vector<Arc> arcs;
  for (const Ends& e : ps.edges()) {
    int a = p.index_of_label(e.u), b = p.index_of_label(e.v);
    if (p.leq(a, b))
      arcs.push_back({e.u, e.v});
    else if (p.leq(b, a))
      arcs.push_back({e.v, e.u});
    else
      throw PreconditionError("pyramid leaves concurrent pieces incomparable");
  }
  return Digraph(ps.num_vertices(), std::move(arcs));
}

Heap orientation_to_pyramid(const Digraph& o, const PieceSystem& ps) {
  if (!is_orientation_of(o, ps.as_multigraph())) throw PreconditionError("digraph is not an orientation of the piece system");
  if (!is_acyclic(o)) throw PreconditionError("orientation has a directed cycle");
  if (sinks(o).size() != 1) throw PreconditionError("orientation does not have a unique sink");
  std::vector<int> ids(static_cast<std::size_t>(o.num_vertices()));
  std::iota(ids.begin(), ids.end(), 0);
  std::vector<std::pair<int, int>> le;
  for (const Arc& a : o.arcs()) le.emplace_back(a.tail, a.head);
  return Heap(ids, ids, le);
}

}  // namespace circpart
