#include "circpart/harary.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "circpart/canonical.hpp"
#include "circpart/error.hpp"
#include "circpart/linalg.hpp"
#include "circpart/trails.hpp"

namespace circpart {

namespace {

constexpr int kMaxVeblenEdges = 12;

bool is_connected_veblen_block(const Multigraph& x, EdgeMask block) {
  if (!is_edge_connected_support(x, block)) return false;
  std::vector<int> deg(static_cast<std::size_t>(x.num_vertices()), 0);
  for_each_bit(block, [&](int e) {
    ++deg[static_cast<std::size_t>(x.ends(e).u)];
    ++deg[static_cast<std::size_t>(x.ends(e).v)];
  });
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

void require_connected_veblen(const Multigraph& x) {
  if (x.num_edges() == 0 || !is_veblen(x) || !is_edge_connected_support(x, x.all_edges()))
    throw PreconditionError("associated coefficients need a connected Veblen multigraph");
}

template <class Value, class Compute>
Value memoized(std::map<std::string, Value>& cache, std::mutex& mu, const std::string& key, Compute compute) {
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Value v = compute();
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, v);
  return v;
}

// Per-isomorphism-class caches; both quantities are invariant under relabeling.
std::mutex coefficient_mutex;
std::map<std::string, Rational> coefficient_cache;
std::mutex weight_mutex;
std::map<std::string, Rational> weight_cache;

Rational cached_coefficient(const Multigraph& block) {
  return memoized(coefficient_cache, coefficient_mutex, canonical_form(without_isolated_vertices(block)), [&] { return associated_coefficient(block); });
}

}  // namespace

DecompositionSummary decompositions(const Multigraph& x) {
  if (!is_veblen(x)) throw PreconditionError("decompositions need a Veblen multigraph (all degrees even)");
  if (x.num_edges() > kMaxVeblenEdges) throw SizeError("decompositions are capped at 12 edges");
  DecompositionSummary out;
  std::vector<EdgeMask> blocks;
  std::function<void(EdgeMask)> rec = [&](EdgeMask unassigned) {
    if (unassigned == 0) {
      out.labeled.emplace_back(x.num_edges(), blocks);
      return;
    }
    const int e = lowest_bit(unassigned);
    const EdgeMask rest = unassigned & ~bit(e);
    EdgeMask sub = rest;
    while (true) {
      EdgeMask block = sub | bit(e);
      if (is_connected_veblen_block(x, block)) {
        blocks.push_back(block);
        rec(unassigned & ~block);
        blocks.pop_back();
      }
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
  };
  if (x.num_edges() > 0) rec(x.all_edges());
  std::sort(out.labeled.begin(), out.labeled.end());

  std::map<std::vector<ApproxClass>, DecompositionClass> by_key;
  for (const SetPartition& s : out.labeled) {
    std::vector<ApproxClass> key;
    for (EdgeMask b : s.blocks()) key.push_back(approx_class(sub_multigraph(x, b)));
    std::sort(key.begin(), key.end());
    auto [it, inserted] = by_key.try_emplace(key);
    DecompositionClass& c = it->second;
    if (inserted) {
      c.representative = s;
      c.block_classes = key;
      c.components = static_cast<int>(s.size());
      c.block_factorials = 1;
      for (EdgeMask b : s.blocks()) c.block_factorials = checked_mul(c.block_factorials, parallel_factorial_product(sub_multigraph(x, b)));
      c.stabilizer = 1;
      for (std::size_t i = 0; i < key.size();) {
        std::size_t j = i;
        while (j < key.size() && key[j] == key[i]) ++j;
        c.stabilizer = checked_mul(c.stabilizer, factorial(static_cast<int>(j - i)));
        i = j;
      }
    }
    ++c.labeled_count;
  }
  const std::int64_t mx = parallel_factorial_product(x);
  for (auto& [key, c] : by_key) {
    out.class_sizes_match = out.class_sizes_match && c.labeled_count * c.block_factorials * c.stabilizer == mx;
    out.classes.push_back(std::move(c));
  }
  return out;
}

Rational associated_coefficient(const Multigraph& x) {
  require_connected_veblen(x);
  std::int64_t circuits = 0;
  for_each_orientation(x, [&](const Digraph& o) {
    if (is_eulerian(o)) circuits = checked_add(circuits, count_eulerian_circuits(o, o.all_edges()));
  });
  return Rational(circuits, parallel_factorial_product(x));
}

namespace {

// Every orientation class of X: for each parallel class {u,v} of size m,
// choose how many of its edges run u -> v.
void for_each_orientation_class(const Multigraph& x, const std::function<void(const ApproxClass&)>& visit) {
  const ApproxClass cx = approx_class(x);
  std::vector<std::pair<std::pair<int, int>, int>> pairs(cx.multiplicity.begin(), cx.multiplicity.end());
  ApproxClass o{x.num_vertices(), true, {}};
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == pairs.size()) {
      visit(o);
      return;
    }
    auto [uv, m] = pairs[i];
    for (int k = 0; k <= m; ++k) {
      if (k) o.multiplicity[{uv.first, uv.second}] = k;
      if (m - k) o.multiplicity[{uv.second, uv.first}] = m - k;
      rec(i + 1);
      o.multiplicity.erase({uv.first, uv.second});
      o.multiplicity.erase({uv.second, uv.first});
    }
  };
  rec(0);
}

}  // namespace

Rational associated_coefficient_via_rootings(const Multigraph& x) {
  require_connected_veblen(x);
  Rational total(0);
  for_each_orientation_class(x, [&](const ApproxClass& c) {
    Digraph d = digraph_of(c);
    if (!is_eulerian(d)) return;
    const std::int64_t n = out_degree_factorial_product(d);
    const std::int64_t k = arc_multiplicity_factorial_product(d);
    total += Rational(n / k) * Rational(count_circuits_best(d), n);
  });
  return total;
}

std::vector<RootingClassSize> rooting_class_sizes(const Multigraph& x) {
  require_connected_veblen(x);
  std::vector<RootingClassSize> out;
  for_each_orientation_class(x, [&](const ApproxClass& c) {
    Digraph d = digraph_of(c);
    if (!is_eulerian(d)) return;
    RootingClassSize r{c, out_degree_factorial_product(d) / arc_multiplicity_factorial_product(d), 1};
    for (int u = 0; u < d.num_vertices(); ++u) {
      std::vector<int> heads;
      for (int e : d.out_edges(u)) heads.push_back(d.head(e));
      std::sort(heads.begin(), heads.end());
      std::int64_t sequences = 0;
      do ++sequences;
      while (std::next_permutation(heads.begin(), heads.end()));
      r.enumerated = checked_mul(r.enumerated, sequences);
    }
    out.push_back(std::move(r));
  });
  return out;
}

Rational weight(const Multigraph& x, int n) {
  if (n < 0) throw PreconditionError("weight needs a nonnegative vertex count");
  if (x.num_edges() == 0) throw PreconditionError("weight needs at least one edge");
  // -(k-1)^n for k = 2.
  const Rational base(-1);
  Rational w(0);
  for (const DecompositionClass& c : decompositions(x).classes) {
    Rational cs(1);
    for (EdgeMask b : c.representative.blocks()) cs *= cached_coefficient(sub_multigraph(x, b));
    Rational sign = c.components % 2 ? base : Rational(1);
    w -= sign * cs / Rational(c.stabilizer);
  }
  return w;
}

Rational infragraph_term(const Multigraph& x) {
  if (x.num_edges() == 0) throw PreconditionError("infragraph term needs at least one edge");
  EdgeMask left = x.all_edges();
  Rational product(1);
  int components = 0;
  while (left) {
    // Grow the component of the lowest remaining edge.
    EdgeMask comp = bit(lowest_bit(left));
    EdgeMask verts = x.vertex_support(comp);
    bool grew = true;
    while (grew) {
      grew = false;
      for_each_bit(left & ~comp, [&](int e) {
        if ((verts >> x.ends(e).u) & 1U || (verts >> x.ends(e).v) & 1U) {
          comp |= bit(e);
          verts |= bit(x.ends(e).u) | bit(x.ends(e).v);
          grew = true;
        }
      });
    }
    Multigraph part = sub_multigraph(x, comp);
    product *= memoized(weight_cache, weight_mutex, canonical_form(without_isolated_vertices(part)), [&] { return weight(part, x.num_vertices()); });
    ++components;
    left &= ~comp;
  }
  return components % 2 ? -product : product;
}

std::int64_t circuit_partition_of_orientation(const Digraph& o, int t) {
  if (!is_eulerian(o)) throw PreconditionError("circuit partitions need an Eulerian orientation");
  if (t < 1) throw PreconditionError("part count must be positive");
  std::int64_t total = 0;
  for (const SetPartition& s : decompositions(underlying_multigraph(o)).labeled) {
    if (static_cast<int>(s.size()) != t) continue;
    std::int64_t product = 1;
    for (EdgeMask b : s.blocks()) {
      if (!is_eulerian(o, b)) {
        product = 0;
        break;
      }
      product = checked_mul(product, count_eulerian_circuits(o, b));
    }
    total = checked_add(total, product);
  }
  return total;
}

int component_count(const ApproxClass& x) {
  std::vector<int> parent(static_cast<std::size_t>(x.num_vertices));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[static_cast<std::size_t>(v)] == v ? v : parent[static_cast<std::size_t>(v)] = find(parent[static_cast<std::size_t>(v)]);
  };
  EdgeMask touched = 0;
  for (const auto& [k, m] : x.multiplicity) {
    touched |= bit(k.first) | bit(k.second);
    parent[static_cast<std::size_t>(find(k.first))] = find(k.second);
  }
  int c = 0;
  for_each_bit(touched, [&](int v) { c += find(v) == v; });
  return c;
}

std::vector<ApproxClass> enumerate_infragraphs(const SimpleGraph& host, int max_edges) {
  if (max_edges > kMaxVeblenEdges) throw SizeError("infragraph enumeration is capped at 12 edges");
  const int m = host.num_edges();
  std::vector<int> last_edge(static_cast<std::size_t>(host.num_vertices()), -1);
  for (int e = 0; e < m; ++e) {
    last_edge[static_cast<std::size_t>(host.ends(e).u)] = e;
    last_edge[static_cast<std::size_t>(host.ends(e).v)] = e;
  }
  std::vector<ApproxClass> out;
  std::vector<int> mult(static_cast<std::size_t>(m), 0), deg(static_cast<std::size_t>(host.num_vertices()), 0);
  std::function<void(int, int)> rec = [&](int e, int budget) {
    if (e == m) {
      if (budget == max_edges) return;
      ApproxClass c{host.num_vertices(), false, {}};
      for (int f = 0; f < m; ++f)
        if (mult[static_cast<std::size_t>(f)]) c.multiplicity[{host.ends(f).u, host.ends(f).v}] = mult[static_cast<std::size_t>(f)];
      out.push_back(std::move(c));
      return;
    }
    const int u = host.ends(e).u, v = host.ends(e).v;
    for (int k = 0; k <= budget; ++k) {
      mult[static_cast<std::size_t>(e)] = k;
      deg[static_cast<std::size_t>(u)] += k;
      deg[static_cast<std::size_t>(v)] += k;
      bool ok = true;
      for (int w : {u, v})
        if (last_edge[static_cast<std::size_t>(w)] == e && deg[static_cast<std::size_t>(w)] % 2) ok = false;
      if (ok) rec(e + 1, budget - k);
      deg[static_cast<std::size_t>(u)] -= k;
      deg[static_cast<std::size_t>(v)] -= k;
    }
    mult[static_cast<std::size_t>(e)] = 0;
  };
  rec(0, max_edges);
  std::sort(out.begin(), out.end(), [](const ApproxClass& a, const ApproxClass& b) {
    auto key = [](const ApproxClass& c) { return std::make_pair(c.num_edges(), component_count(c)); };
    if (key(a) != key(b)) return key(a) < key(b);
    return a < b;
  });
  return out;
}

namespace {

void require_small_host(const SimpleGraph& host) {
  if (host.num_vertices() > 8) throw SizeError("characteristic polynomial routes are capped at 8 vertices");
}

IntPolynomial integral(const std::vector<Rational>& coeffs) {
  std::vector<std::int64_t> out;
  for (const Rational& c : coeffs) {
    if (c.denominator() != 1) throw std::logic_error("characteristic polynomial coefficient is not an integer");
    out.push_back(c.numerator());
  }
  return IntPolynomial(std::move(out));
}

}  // namespace

IntPolynomial hs_characteristic_polynomial(const SimpleGraph& host) {
  require_small_host(host);
  const int n = host.num_vertices();
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
  coeffs[static_cast<std::size_t>(n)] = 1;
  for (const ApproxClass& c : enumerate_infragraphs(host, n))
    coeffs[static_cast<std::size_t>(n - c.num_edges())] += infragraph_term(multigraph_of(c));
  return integral(coeffs);
}

IntPolynomial elementary_subgraph_formula(const SimpleGraph& host) {
  const int n = host.num_vertices();
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n) + 1, 0);
  // Decide vertices in increasing order: leave out, match, or start a cycle
  // whose least vertex is the current one.
  std::function<void(EdgeMask, int, int, int)> rec = [&](EdgeMask undecided, int covered, int components, int cycles) {
    if (undecided == 0) {
      std::int64_t term = (components % 2 ? -1 : 1) * (std::int64_t{1} << cycles);
      coeffs[static_cast<std::size_t>(n - covered)] = checked_add(coeffs[static_cast<std::size_t>(n - covered)], term);
      return;
    }
    const int v = lowest_bit(undecided);
    const EdgeMask rest = undecided & ~bit(v);
    rec(rest, covered, components, cycles);
    for_each_bit(host.neighbors(v) & rest, [&](int w) { rec(rest & ~bit(w), covered + 2, components + 1, cycles); });
    std::function<void(int, int, EdgeMask, int)> walk = [&](int cur, int second, EdgeMask used, int len) {
      if (len >= 3 && host.adjacent(cur, v) && second < cur) rec(rest & ~used, covered + len, components + 1, cycles + 1);
      for_each_bit(host.neighbors(cur) & rest & ~used, [&](int w) { walk(w, second < 0 ? w : second, used | bit(w), len + 1); });
    };
    walk(v, -1, 0, 1);
  };
  rec(host.all_vertices(), 0, 0, 0);
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial charpoly_determinant_oracle(const SimpleGraph& host) {
  const int n = host.num_vertices();
  std::vector<std::int64_t> values;
  for (int t = 0; t <= n; ++t) {
    std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = t;
      for_each_bit(host.neighbors(i), [&](int j) { m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1; });
    }
    values.push_back(integer_determinant(m));
  }
  // Lagrange interpolation through (t, values[t]), t = 0..n, over the rationals.
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom(1);
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * Rational(j);
      }
      basis = std::move(next);
      denom *= Rational(i - j);
    }
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += basis[k] * Rational(values[static_cast<std::size_t>(i)]) / denom;
  }
  return integral(coeffs);
}

}  // namespace circpart
