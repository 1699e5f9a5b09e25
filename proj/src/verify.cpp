#include "circpart/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "circpart/bond.hpp"
#include "circpart/canonical.hpp"
#include "circpart/corpus.hpp"
#include "circpart/decomposition.hpp"
#include "circpart/harary.hpp"
#include "circpart/heaps.hpp"
#include "circpart/lattice.hpp"
#include "circpart/trails.hpp"

namespace circpart {

using nlohmann::json;

void CheckResult::fail(const std::string& what) {
  if (failures++ == 0) first_failure = what;
}

json CheckResult::to_json() const {
  json j{{"name", name}, {"items", items}, {"failures", failures}, {"passed", passed()}};
  if (failures) j["first_failure"] = first_failure;
  if (!details.empty()) j["details"] = details;
  return j;
}

std::string describe(const Digraph& d) {
  std::ostringstream out;
  out << "digraph " << d.num_vertices() << ":";
  for (const Arc& a : d.arcs()) out << ' ' << a.tail + 1 << '>' << a.head + 1;
  return out.str();
}

std::string describe(const Multigraph& x) {
  std::ostringstream out;
  out << "multigraph " << x.num_vertices() << ":";
  for (const Ends& e : x.edges()) out << ' ' << e.u + 1 << '-' << e.v + 1;
  return out.str();
}

std::string describe(const SimpleGraph& g) { return describe(g.as_multigraph()); }

namespace {

EulerianSemilattice semilattice(const Digraph& d, bool flip_top_sign) {
  EulerianSemilattice t = build_eulerian_semilattice(d);
  if (flip_top_sign) t.weights[static_cast<std::size_t>(t.top)] = -t.weights[static_cast<std::size_t>(t.top)];
  return t;
}

json poly_json(const IntPolynomial& p) { return p.coefficients(); }

std::vector<std::int64_t> sorted_layer(const EulerianSemilattice& t, std::size_t blocks) {
  std::vector<std::int64_t> v;
  for (std::size_t i = 0; i < t.elements.size(); ++i)
    if (t.elements[i].size() == blocks) v.push_back(t.weights[i]);
  std::sort(v.begin(), v.end());
  return v;
}

Digraph running_example() {
  LabelTable labels{{"1", "2", "3", "4"}, {"e1", "e2", "f1", "f2", "g1", "g2", "h1", "h2"}};
  return Digraph(4, {{1, 0}, {0, 1}, {0, 2}, {2, 0}, {2, 1}, {1, 2}, {3, 2}, {2, 3}}, labels);
}

template <class F>
void guarded(CheckResult& r, const std::string& item, F&& body) {
  ++r.items;
  try {
    if (!body()) r.fail(item);
  } catch (const std::exception& e) {
    r.fail(item + " (threw: " + e.what() + ")");
  }
}

bool is_decomposable(const Multigraph& x) { return decompositions(x).labeled.size() > 1; }

}  // namespace

CheckResult check_running_example(bool flip_top_sign) {
  CheckResult r{"running-example"};
  const Digraph d = running_example();
  const EulerianSemilattice t = semilattice(d, flip_top_sign);
  const MartinPolynomials m = martin_polynomial(t);
  json f_table = json::array();
  for (std::size_t i = 0; i < t.elements.size(); ++i)
    f_table.push_back({{"partition", t.elements[i].to_string(d.labels().edges)}, {"F", t.weights[i]}});
  r.details["elements"] = f_table;
  r.details["f"] = m.f;
  r.details["s"] = poly_json(m.s);

  guarded(r, "|T(D)| = 16", [&] { return t.elements.size() == 16; });
  guarded(r, "F on the top layer is -6", [&] { return sorted_layer(t, 1) == std::vector<std::int64_t>{-6}; });
  guarded(r, "F on the two-block layer is 2,1,1,1,1,3,1,1",
          [&] { return sorted_layer(t, 2) == std::vector<std::int64_t>{1, 1, 1, 1, 1, 1, 2, 3}; });
  guarded(r, "F on the three-block layer is six -1's", [&] { return sorted_layer(t, 3) == std::vector<std::int64_t>(6, -1); });
  guarded(r, "F at the bottom is 1", [&] { return sorted_layer(t, 4) == std::vector<std::int64_t>{1}; });
  guarded(r, "f = (6, 11, 6, 1)", [&] { return m.f == std::vector<std::int64_t>{6, 11, 6, 1}; });
  guarded(r, "alternating sum of f is 0", [&] {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < m.f.size(); ++k) s += (k % 2 ? 1 : -1) * m.f[k];
    return s == 0;
  });
  guarded(r, "s = t^3 + 3t^2 + 2t", [&] { return m.s == IntPolynomial({0, 2, 3, 1}); });
  guarded(r, "s(2) = 24 = product of out-degree factorials", [&] { return m.s(2) == 24 && out_degree_factorial_product(d) == 24; });
  guarded(r, "six Eulerian circuits by enumeration and by BEST",
          [&] { return eulerian_circuits(d).size() == 6 && count_circuits_best(d) == 6; });
  const IdentityReport id = martin_chromatic_identity(d);
  json chis = json::array();
  std::multiset<std::vector<std::int64_t>> got;
  for (const IdentityTerm& term : id.terms) {
    chis.push_back({{"partition", term.partition.to_string(d.labels().edges)}, {"chi", poly_json(term.characteristic)}});
    got.insert(term.characteristic.coefficients());
  }
  r.details["characteristic_polynomials"] = chis;
  guarded(r, "chi of the two intersection graphs", [&] {
    return got == std::multiset<std::vector<std::int64_t>>{{-4, 8, -5, 1}, {2, -3, 1}};
  });
  guarded(r, "s(1 - t) = -sum (-1)^|a| chi_a(t)", [&] { return id.holds; });
  return r;
}

CheckResult check_cancellation(const std::vector<Digraph>& corpus, bool flip_top_sign) {
  CheckResult r{"cancellation"};
  std::int64_t cycles = 0;
  for (const Digraph& d : corpus) {
    guarded(r, describe(d), [&] {
      const auto f = circuit_partition_counts(semilattice(d, flip_top_sign));
      std::int64_t s = 0;
      for (std::size_t k = 0; k < f.size(); ++k) s += (k % 2 ? 1 : -1) * f[k];
      const bool cycle = is_directed_cycle(d, d.all_edges());
      cycles += cycle;
      return s == (cycle ? -1 : 0);
    });
  }
  r.details["single_cycles"] = cycles;
  return r;
}

CheckResult check_mobius(const std::vector<Digraph>& corpus, bool flip_top_sign) {
  CheckResult r{"mobius"};
  std::int64_t elements = 0;
  for (const Digraph& d : corpus) {
    guarded(r, describe(d), [&] {
      const EulerianSemilattice t = semilattice(d, flip_top_sign);
      std::vector<std::int64_t> g(t.elements.size(), 0);
      bool ok = true;
      for (std::size_t b = 0; b < t.elements.size(); ++b) {
        for (int a : t.order.down_set(static_cast<int>(b))) g[b] += t.weights[static_cast<std::size_t>(a)];
        const bool minimal = std::binary_search(t.minimal.begin(), t.minimal.end(), static_cast<int>(b));
        if (!minimal && g[b] != 0) ok = false;
        ++elements;
      }
      std::int64_t inverted = 0;
      for (int b : t.order.down_set(t.top)) inverted += t.order.mobius(b, t.top) * g[static_cast<std::size_t>(b)];
      return ok && inverted == t.weights[static_cast<std::size_t>(t.top)];
    });
  }
  r.details["elements"] = elements;
  return r;
}

CheckResult check_martin_identities(const std::vector<Digraph>& corpus) {
  CheckResult r{"martin-identities"};
  for (const Digraph& d : corpus) {
    guarded(r, describe(d), [&] {
      const MartinPolynomials m = martin_polynomial(d);
      bool ok = m.s(2) == out_degree_factorial_product(d) && m.r(1) == m.s(2) && m.s(0) == (is_directed_cycle(d, d.all_edges()) ? 1 : 0);
      ok = ok && martin_chromatic_identity(d).holds;
      int delta = 0;
      for (int v = 0; v < d.num_vertices(); ++v) delta = std::max(delta, d.out_degree(v));
      if (delta >= 2) ok = ok && las_vergnas_divisibility(d).divisible;
      for (int k = 1; k <= static_cast<int>(m.f.size()); ++k)
        ok = ok && circuit_partition_of_orientation(d, k) == m.f[static_cast<std::size_t>(k - 1)];
      return ok;
    });
  }
  return r;
}

CheckResult check_best(const std::vector<Digraph>& corpus) {
  CheckResult r{"best-vs-enumeration"};
  for (const Digraph& d : corpus)
    guarded(r, describe(d), [&] { return static_cast<std::int64_t>(eulerian_circuits(d).size()) == count_circuits_best(d); });
  return r;
}

CheckResult check_trail_pyramids(const std::vector<Digraph>& corpus) {
  CheckResult r{"trail-pyramid-bijection"};
  std::int64_t trails_seen = 0;
  for (const Digraph& d : corpus) {
    guarded(r, describe(d), [&] {
      const auto q = cycle_partitions(d);
      const std::int64_t circuits = count_circuits_best(d);
      for (int e = 0; e < d.num_edges(); ++e) {
        const auto trails = eulerian_trails_ending_at(d, e);
        if (static_cast<std::int64_t>(trails.size()) != circuits) return false;
        const auto dps = decomposition_pyramids(d, e);
        if (dps.size() != trails.size()) return false;
        for (const SetPartition& a : q) {
          const auto fiber = trails_with_cycle_partition(d, e, a);
          const SimpleGraph ga = intersection_graph(d, a);
          if (static_cast<std::int64_t>(fiber.size()) != count_full_pyramids(ga, ga.all_vertices(), a.block_of(e))) return false;
        }
        std::set<std::pair<SetPartition, Heap>> images;
        for (const Trail& w : trails) {
          const DecompositionPyramid p = trail_to_pyramid(d, w);
          if (!(pyramid_to_trail(d, e, p) == w)) return false;
          images.emplace(p.partition, p.pyramid);
          ++trails_seen;
        }
        if (images.size() != trails.size()) return false;
      }
      return true;
    });
  }
  r.details["trails"] = trails_seen;
  return r;
}

CheckResult check_pyramid_balance(const std::vector<Digraph>& corpus) {
  CheckResult r{"pyramid-balance"};
  std::set<std::string> seen;
  for (const Digraph& d : corpus) {
    for (const SetPartition& a : cycle_partitions(d)) {
      const SimpleGraph ps = intersection_graph(d, a);
      if (!seen.insert(canonical_form(ps)).second) continue;
      guarded(r, describe(ps), [&] {
        const int k = ps.num_vertices();
        const std::int64_t first = count_full_pyramids(ps, ps.all_vertices(), 0);
        for (int b = 1; b < k; ++b)
          if (count_full_pyramids(ps, ps.all_vertices(), b) != first) return false;
        const BondLattice l = build_bond_lattice(ps);
        const std::int64_t mu = l.order.mobius(l.bottom, l.top);
        if (mu != ((k - 1) % 2 ? -first : first)) return false;
        for (const Ends& e : ps.edges())
          if (!pyramid_recursion_check(ps, e.u, e.v).holds || !pyramid_recursion_check(ps, e.v, e.u).holds) return false;
        return true;
      });
    }
  }
  r.details["piece_systems"] = seen.size();
  return r;
}

CheckResult check_bijections(const std::vector<SimpleGraph>& graphs, int orders_per_graph, std::uint64_t seed) {
  CheckResult r{"nbc-orientation-bijection"};
  std::mt19937_64 rng(seed);
  std::int64_t bases_seen = 0;
  for (const SimpleGraph& g : graphs) {
    for (int trial = 0; trial < orders_per_graph; ++trial) {
      const EdgeOrder ord = EdgeOrder::shuffled(g.num_edges(), rng);
      std::ostringstream item;
      item << describe(g) << " order";
      for (int e : ord.ascending()) item << ' ' << e + 1;
      guarded(r, item.str(), [&] {
        const auto bases = nbc_bases(g, ord);
        const BondLattice l = build_bond_lattice(g);
        if (!rota_check(l, ord).all_hold) return false;
        for (int x = 0; x < g.num_vertices(); ++x) {
          const auto targets = unique_sink_orientations(g, x);
          if (targets.size() != bases.size()) return false;
          std::set<std::vector<std::pair<int, int>>> images;
          for (EdgeMask t : bases) {
            const Digraph mu = mu_explicit(t, g, x, ord);
            if (mu.arcs() != phi_recursive(t, g, x, ord).arcs()) return false;
            if (psi_recursive(mu, g, ord) != t) return false;
            std::vector<std::pair<int, int>> key;
            for (const Arc& a : mu.arcs()) key.emplace_back(a.tail, a.head);
            images.insert(key);
            ++bases_seen;
          }
          if (images.size() != bases.size()) return false;
          for (const Digraph& o : targets)
            if (phi_recursive(psi_recursive(o, g, ord), g, x, ord).arcs() != o.arcs()) return false;
        }
        return true;
      });
    }
  }
  r.details["bases"] = bases_seen;
  return r;
}

CheckResult check_chromatic(const std::vector<SimpleGraph>& graphs, std::uint64_t seed) {
  CheckResult r{"chromatic"};
  std::mt19937_64 rng(seed);
  for (const SimpleGraph& g : graphs) {
    const EdgeOrder ord = EdgeOrder::shuffled(g.num_edges(), rng);
    guarded(r, describe(g), [&] {
      const IntPolynomial p = chromatic_polynomial(g);
      if (p != chromatic_polynomial_whitney(g, ord)) return false;
      if (IntPolynomial::linear(0, 1) * characteristic_polynomial(build_bond_lattice(g)) != p) return false;
      const OrientationCounts c = orientation_counts_vs_chromatic(g);
      return c.total_matches_p_minus_one && c.unique_sink_matches_linear;
    });
  }
  return r;
}

CheckResult check_charpoly(const std::vector<SimpleGraph>& graphs) {
  CheckResult r{"characteristic-polynomial"};
  for (const SimpleGraph& g : graphs) {
    guarded(r, describe(g), [&] {
      const IntPolynomial det = charpoly_determinant_oracle(g);
      return hs_characteristic_polynomial(g) == det && elementary_subgraph_formula(g) == det;
    });
  }
  return r;
}

CheckResult check_veblen(const std::vector<Multigraph>& corpus) {
  CheckResult r{"veblen-weights"};
  std::int64_t decomposable = 0;
  for (const Multigraph& x : corpus) {
    guarded(r, describe(x), [&] {
      const Rational c = associated_coefficient(x);
      if (c != associated_coefficient_via_rootings(x)) return false;
      if (c != Rational(count_undirected_eulerian_circuits(x), parallel_factorial_product(x))) return false;
      if (!decompositions(x).class_sizes_match) return false;
      for (const RootingClassSize& s : rooting_class_sizes(x))
        if (s.formula != s.enumerated) return false;
      const Rational w = weight(x, x.num_vertices());
      if (weight(x, x.num_vertices() + 3) != w) return false;
      if (is_decomposable(x)) {
        ++decomposable;
        return w == Rational(0);
      }
      return w != Rational(0);
    });
  }
  r.details["decomposable"] = decomposable;
  return r;
}

std::vector<Multigraph> veblen_check_corpus(int max_edges) {
  std::vector<Multigraph> out = veblen_corpus(max_edges);
  std::set<std::string> seen;
  for (const Multigraph& x : out) seen.insert(canonical_form(x));
  for (const ApproxClass& c : enumerate_infragraphs(complete_graph(5), max_edges)) {
    if (component_count(c) != 1) continue;
    Multigraph x = without_isolated_vertices(multigraph_of(c));
    if (seen.insert(canonical_form(x)).second) out.push_back(std::move(x));
  }
  return out;
}

std::vector<SimpleGraph> charpoly_check_corpus(const VerifyConfig& config) {
  std::vector<SimpleGraph> out = connected_graph_corpus(config.max_vertices);
  for (auto& [name, g] : spot_graphs(config.spot_vertices, config.spot_random, config.seed)) out.push_back(std::move(g));
  return out;
}

VerifyReport run_verification_suite(const VerifyConfig& config) {
  VerifyConfig c = config;
  json caps = json::array();
  if (c.max_edges < 1 || c.max_edges > 8) {
    caps.push_back("max-edges " + std::to_string(c.max_edges) + " outside 1..8; using 8");
    c.max_edges = 8;
  }
  if (c.max_vertices < 1 || c.max_vertices > 6) {
    caps.push_back("max-vertices " + std::to_string(c.max_vertices) + " outside 1..6; using 6");
    c.max_vertices = 6;
  }
  const auto digraphs = eulerian_digraph_corpus(c.max_edges);
  const auto graphs = connected_graph_corpus(c.max_vertices);
  std::vector<CheckResult> checks{
      check_running_example(c.flip_top_sign),
      check_cancellation(digraphs, c.flip_top_sign),
      check_mobius(digraphs, c.flip_top_sign),
      check_martin_identities(digraphs),
      check_best(digraphs),
      check_trail_pyramids(digraphs),
      check_pyramid_balance(digraphs),
      check_bijections(graphs, c.orders_per_graph, c.seed),
      check_chromatic(graphs, c.seed),
      check_charpoly(charpoly_check_corpus(c)),
      check_veblen(veblen_check_corpus(c.max_edges)),
  };
  VerifyReport out;
  out.passed = true;
  json list = json::array();
  for (const CheckResult& r : checks) {
    out.passed = out.passed && r.passed();
    list.push_back(r.to_json());
  }
  out.report = json{{"schema", 1},
                    {"command", "verify"},
                    {"seed", c.seed},
                    {"max_edges", c.max_edges},
                    {"max_vertices", c.max_vertices},
                    {"flip_top_sign", c.flip_top_sign},
                    {"corpus", {{"eulerian_digraphs", digraphs.size()}, {"simple_graphs", graphs.size()}}},
                    {"cap_violations", caps},
                    {"checks", list},
                    {"passed", out.passed}};
  return out;
}

}  // namespace circpart
