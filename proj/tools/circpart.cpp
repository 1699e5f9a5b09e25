#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>

#include "circpart/bond.hpp"
#include "circpart/decomposition.hpp"
#include "circpart/error.hpp"
#include "circpart/harary.hpp"
#include "circpart/heaps.hpp"
#include "circpart/io.hpp"
#include "circpart/lattice.hpp"
#include "circpart/trails.hpp"
#include "circpart/verify.hpp"

using namespace circpart;
using nlohmann::json;

namespace {

struct Options {
  std::string file;
  std::string format = "json";
  std::uint64_t seed = 1;
  int max_edges = 8;
  int max_vertices = 6;
  std::string order;
  std::string sink;
  std::string piece;
  std::string method = "hs";
  int n = -1;
  bool flip_top_sign = false;
};

Digraph load_digraph(const std::string& path, const std::string& command) {
  ParsedGraph g = parse_graph_file(path);
  if (auto* d = std::get_if<Digraph>(&g)) return *d;
  throw PreconditionError(command + " needs a digraph file, got a multigraph");
}

Multigraph load_multigraph(const std::string& path, const std::string& command) {
  ParsedGraph g = parse_graph_file(path);
  if (auto* x = std::get_if<Multigraph>(&g)) return *x;
  throw PreconditionError(command + " needs a multigraph file, got a digraph");
}

SimpleGraph load_simple(const std::string& path, const std::string& command, Multigraph* labelled = nullptr) {
  Multigraph x = load_multigraph(path, command);
  for (int u = 0; u < x.num_vertices(); ++u)
    for (int v = u + 1; v < x.num_vertices(); ++v)
      if (x.multiplicity(u, v) > 1)
        throw PreconditionError(command + " needs a simple graph: vertices " + x.vertex_label(u) + " and " + x.vertex_label(v) +
                                " are joined by parallel edges");
  if (labelled) *labelled = x;
  return SimpleGraph::from_multigraph(x);
}

void require_connected(const SimpleGraph& g, const std::string& command) {
  if (!g.is_connected()) throw PreconditionError(command + " needs a connected graph");
}

int find_label(const std::vector<std::string>& labels, const std::string& token, const std::string& what) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == token) return static_cast<int>(i);
  throw PreconditionError("unknown " + what + " '" + token + "'");
}

json edge_set(EdgeMask m, const std::vector<std::string>& labels) {
  json out = json::array();
  for_each_bit(m, [&](int e) { out.push_back(labels.at(static_cast<std::size_t>(e))); });
  return out;
}

json arcs_json(const Digraph& o, const std::vector<std::string>& vertices) {
  json out = json::array();
  for (const Arc& a : o.arcs())
    out.push_back({vertices.at(static_cast<std::size_t>(a.tail)), vertices.at(static_cast<std::size_t>(a.head))});
  return out;
}

json trail_json(const Trail& w, const Digraph& d) {
  json out = json::array();
  for (int e : w.edges) out.push_back(d.edge_label(e));
  return out;
}

json rational_json(const Rational& q) {
  return {{"numerator", q.numerator()}, {"denominator", q.denominator()},
          {"value", std::to_string(q.numerator()) + (q.denominator() == 1 ? "" : "/" + std::to_string(q.denominator()))}};
}

json heap_json(const Heap& h, const std::vector<std::string>& piece_labels) {
  json labels = json::array();
  for (int l : h.labels()) labels.push_back(piece_labels.at(static_cast<std::size_t>(l)));
  json covers = json::array();
  for (auto [i, j] : h.covers()) covers.push_back({h.id(i), h.id(j)});
  return {{"elements", h.ids()}, {"covers", covers}, {"labels", labels}};
}

json envelope(const std::string& command, const std::string& file) {
  json j{{"schema", 1}, {"command", command}};
  if (!file.empty()) j["file"] = file;
  return j;
}

EdgeOrder parse_order(const std::string& spec, const Multigraph& x) {
  if (spec.empty()) return EdgeOrder::identity(x.num_edges());
  std::vector<int> ascending;
  std::stringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) ascending.push_back(find_label(x.labels().edges, token, "edge in --order"));
  if (static_cast<int>(ascending.size()) != x.num_edges())
    throw PreconditionError("--order must list every edge exactly once");
  try {
    return EdgeOrder(ascending);
  } catch (const std::exception&) {
    throw PreconditionError("--order must list every edge exactly once");
  }
}

json cmd_circuits(const Options& o) {
  const Digraph d = load_digraph(o.file, "circuits");
  json list = json::array();
  const auto circuits = eulerian_circuits(d);
  for (const Circuit& c : circuits) list.push_back(trail_json(c.trail, d));
  json j = envelope("circuits", o.file);
  j["count"] = circuits.size();
  j["best"] = count_circuits_best(d);
  j["circuits"] = list;
  return j;
}

json element_table(const Digraph& d, const EulerianSemilattice& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    rows.push_back({{"index", i},
                    {"partition", t.elements[i].to_string(d.labels().edges)},
                    {"blocks", t.elements[i].size()},
                    {"F", t.weights[i]},
                    {"G", cumulative_weight(t, t.elements[i])},
                    {"mu_to_top", t.order.mobius(static_cast<int>(i), t.top)}});
  }
  return rows;
}

json cmd_martin(const Options& o) {
  const Digraph d = load_digraph(o.file, "martin");
  const EulerianSemilattice t = build_eulerian_semilattice(d);
  const MartinPolynomials m = martin_polynomial(t);
  json j = envelope("martin", o.file);
  j["f"] = m.f;
  j["r"] = m.r.coefficients();
  j["s"] = m.s.coefficients();
  j["s_at_2"] = m.s(2);
  j["out_degree_factorial_product"] = out_degree_factorial_product(d);
  j["elements"] = element_table(d, t);
  return j;
}

json cmd_cancellation(const Options& o, bool& ok) {
  const Digraph d = load_digraph(o.file, "cancellation");
  const EulerianSemilattice t = build_eulerian_semilattice(d);
  const CancellationReport c = verify_cancellation(d);
  json j = envelope("cancellation", o.file);
  j["f"] = circuit_partition_counts(t);
  j["alternating_sum"] = c.alternating_sum;
  j["single_cycle"] = c.single_cycle;
  j["holds"] = c.holds;
  j["elements"] = element_table(d, t);
  ok = c.holds;
  return j;
}

json cmd_identity(const Options& o, bool& ok) {
  const Digraph d = load_digraph(o.file, "identity");
  const IdentityReport r = martin_chromatic_identity(d);
  json terms = json::array();
  for (const IdentityTerm& term : r.terms) {
    json edges = json::array();
    for (const Ends& e : term.graph.edges()) edges.push_back({e.u, e.v});
    terms.push_back({{"partition", term.partition.to_string(d.labels().edges)},
                     {"intersection_graph", {{"vertices", term.graph.num_vertices()}, {"edges", edges}}},
                     {"characteristic", term.characteristic.coefficients()},
                     {"chromatic", term.chromatic.coefficients()},
                     {"chromatic_matches", term.chromatic_matches}});
  }
  json j = envelope("identity", o.file);
  j["s_at_one_minus_t"] = r.lhs.coefficients();
  j["minus_signed_characteristic_sum"] = r.rhs.coefficients();
  j["r_at_minus_t"] = r.r_at_minus_t.coefficients();
  j["signed_chromatic_sum"] = r.chromatic_sum.coefficients();
  j["terms"] = terms;
  j["holds"] = r.holds;
  ok = r.holds;
  return j;
}

json cmd_lattice_dump(const Options& o) {
  const Digraph d = load_digraph(o.file, "lattice-dump");
  const EulerianSemilattice t = build_eulerian_semilattice(d);
  json covers = json::array();
  const int size = static_cast<int>(t.elements.size());
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      if (!t.order.less(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < size && cover; ++c)
        if (t.order.less(a, c) && t.order.less(c, b)) cover = false;
      if (cover) covers.push_back({a, b});
    }
  json j = envelope("lattice-dump", o.file);
  j["size"] = size;
  j["top"] = t.top;
  j["minimal"] = t.minimal;
  j["elements"] = element_table(d, t);
  j["covers"] = covers;
  return j;
}

json cmd_nbc(const Options& o) {
  Multigraph x;
  const SimpleGraph g = load_simple(o.file, "nbc", &x);
  require_connected(g, "nbc");
  const EdgeOrder ord = parse_order(o.order, x);
  const auto& el = x.labels().edges;
  json order = json::array();
  for (int e : ord.ascending()) order.push_back(el.at(static_cast<std::size_t>(e)));
  json broken = json::array();
  for (EdgeMask m : broken_circuits(g, ord)) broken.push_back(edge_set(m, el));
  const int sink = o.sink.empty() ? -1 : find_label(x.labels().vertices, o.sink, "vertex in --sink");
  json bases = json::array();
  for (EdgeMask t : nbc_bases(g, ord)) {
    json row{{"edges", edge_set(t, el)}};
    if (sink >= 0) {
      const Digraph mu = mu_explicit(t, g, sink, ord);
      row["orientation"] = arcs_json(mu, x.labels().vertices);
      row["matches_recursive"] = mu.arcs() == phi_recursive(t, g, sink, ord).arcs();
    }
    bases.push_back(row);
  }
  json j = envelope("nbc", o.file);
  j["order"] = order;
  if (sink >= 0) j["sink"] = o.sink;
  j["broken_circuits"] = broken;
  j["count"] = bases.size();
  j["bases"] = bases;
  return j;
}

json cmd_chromatic(const Options& o, bool& ok) {
  const SimpleGraph g = load_simple(o.file, "chromatic");
  const IntPolynomial p = chromatic_polynomial(g);
  const IntPolynomial w = chromatic_polynomial_whitney(g, EdgeOrder::identity(g.num_edges()));
  json j = envelope("chromatic", o.file);
  j["deletion_contraction"] = p.coefficients();
  j["whitney"] = w.coefficients();
  ok = p == w;
  if (g.is_connected()) {
    const IntPolynomial chi = characteristic_polynomial(build_bond_lattice(g));
    j["bond_characteristic"] = chi.coefficients();
    ok = ok && IntPolynomial::linear(0, 1) * chi == p;
    const OrientationCounts c = orientation_counts_vs_chromatic(g);
    j["acyclic_orientations"] = c.acyclic_total;
    j["unique_sink_orientations"] = c.unique_sink;
    j["p_at_minus_one"] = c.p_at_minus_one;
    j["linear_coefficient"] = c.linear_coefficient;
  }
  j["agree"] = ok;
  return j;
}

json cmd_bijection_check(const Options& o, bool& ok) {
  const SimpleGraph g = load_simple(o.file, "bijection-check");
  require_connected(g, "bijection-check");
  const CheckResult r = check_bijections({g}, 3, o.seed);
  json j = envelope("bijection-check", o.file);
  j["seed"] = o.seed;
  j["check"] = r.to_json();
  ok = r.passed();
  return j;
}

json cmd_pyramids(const Options& o) {
  if (o.piece.empty()) throw PreconditionError("pyramids needs --piece");
  json j = envelope("pyramids", o.file);
  ParsedGraph parsed = parse_graph_file(o.file);
  json list = json::array();
  if (auto* d = std::get_if<Digraph>(&parsed)) {
    const int e = find_label(d->labels().edges, o.piece, "edge in --piece");
    for (const DecompositionPyramid& p : decomposition_pyramids(*d, e)) {
      std::vector<std::string> names;
      for (EdgeMask b : p.partition.blocks()) {
        std::string s;
        for_each_bit(b, [&](int f) { s += (s.empty() ? "" : " ") + d->edge_label(f); });
        names.push_back(s);
      }
      json h = heap_json(p.pyramid, names);
      h["partition"] = p.partition.to_string(d->labels().edges);
      h["trail"] = trail_json(pyramid_to_trail(*d, e, p), *d);
      list.push_back(h);
    }
    j["kind"] = "decomposition";
  } else {
    const Multigraph& x = std::get<Multigraph>(parsed);
    const SimpleGraph ps = load_simple(o.file, "pyramids");
    const int beta = find_label(x.labels().vertices, o.piece, "piece in --piece");
    for (const Heap& h : full_pyramids(ps, beta)) list.push_back(heap_json(h, x.labels().vertices));
    j["kind"] = "piece-system";
  }
  j["piece"] = o.piece;
  j["count"] = list.size();
  j["pyramids"] = list;
  return j;
}

json cmd_charpoly(const Options& o) {
  const SimpleGraph g = load_simple(o.file, "charpoly");
  IntPolynomial p;
  if (o.method == "hs")
    p = hs_characteristic_polynomial(g);
  else if (o.method == "elementary")
    p = elementary_subgraph_formula(g);
  else
    p = charpoly_determinant_oracle(g);
  json j = envelope("charpoly", o.file);
  j["method"] = o.method;
  j["polynomial"] = p.coefficients();
  return j;
}

json cmd_weight(const Options& o) {
  if (o.n < 0) throw PreconditionError("weight needs -n with n >= 0");
  const Multigraph x = load_multigraph(o.file, "weight");
  for (int v = 0; v < x.num_vertices(); ++v)
    if (x.degree(v) % 2)
      throw PreconditionError("weight needs a Veblen multigraph: vertex " + x.vertex_label(v) + " has odd degree " +
                              std::to_string(x.degree(v)));
  const Multigraph core = without_isolated_vertices(x);
  std::vector<Ends> flat;
  for (const Ends& e : core.edges()) {
    const Ends key{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (std::find(flat.begin(), flat.end(), key) == flat.end()) flat.push_back(key);
  }
  if (core.num_edges() == 0 || !SimpleGraph(core.num_vertices(), flat).is_connected())
    throw PreconditionError("weight needs a connected Veblen multigraph with at least one edge");
  const DecompositionSummary dec = decompositions(core);
  json j = envelope("weight", o.file);
  j["n"] = o.n;
  j["weight"] = rational_json(weight(core, o.n));
  j["associated_coefficient"] = rational_json(associated_coefficient(core));
  j["associated_coefficient_via_rootings"] = rational_json(associated_coefficient_via_rootings(core));
  j["decompositions"] = dec.labeled.size();
  j["decomposition_classes"] = dec.classes.size();
  j["decomposable"] = dec.labeled.size() > 1;
  return j;
}

json cmd_verify(const Options& o, bool& ok) {
  VerifyConfig c;
  c.seed = o.seed;
  c.max_edges = o.max_edges;
  c.max_vertices = o.max_vertices;
  c.flip_top_sign = o.flip_top_sign;
  VerifyReport r = run_verification_suite(c);
  ok = r.passed;
  return r.report;
}

void print_text(const json& j, std::ostream& out, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    bool flat = !v.is_structured();
    if (v.is_array()) {
      flat = true;
      for (const json& e : v) flat = flat && !e.is_object();
    }
    if (flat) {
      out << indent << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    } else if (v.is_object()) {
      out << indent << it.key() << ":\n";
      print_text(v, out, indent + "  ");
    } else {
      out << indent << it.key() << ":\n";
      for (const json& e : v) {
        out << indent << "  -\n";
        print_text(e, out, indent + "    ");
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circuit partitions, bond lattices, heaps of pieces and Harary-Sachs weights"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto with_file = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "graph file")->required();
    add_format(sub);
    return sub;
  };
  with_file("circuits", "Eulerian circuits of a digraph, by enumeration and BEST");
  with_file("martin", "circuit partition counts and Martin polynomial");
  with_file("cancellation", "alternating sum of circuit partition counts");
  with_file("identity", "Martin polynomial against characteristic polynomials of intersection graphs");
  with_file("lattice-dump", "elements, F and G values and covers of T(D)");
  CLI::App* nbc = with_file("nbc", "NBC bases and their unique-sink orientations");
  nbc->add_option("--order", o.order, "edge labels in ascending order, comma separated");
  nbc->add_option("--sink", o.sink, "vertex label of the sink");
  with_file("chromatic", "chromatic polynomial by deletion-contraction and by NBC sets");
  with_file("bijection-check", "NBC bases against unique-sink orientations for seeded edge orders")
      ->add_option("--seed", o.seed, "edge order seed");
  with_file("pyramids", "full pyramids of a piece system, or decomposition pyramids of a digraph")
      ->add_option("--piece", o.piece, "apex vertex (multigraph) or final edge (digraph)");
  with_file("charpoly", "characteristic polynomial of the adjacency matrix")
      ->add_option("--method", o.method, "hs, elementary or det")
      ->check(CLI::IsMember({"hs", "elementary", "det"}));
  with_file("weight", "Harary-Sachs weight of a connected Veblen multigraph")->add_option("-n", o.n, "number of host vertices");
  CLI::App* verify = app.add_subcommand("verify", "run the exhaustive small-instance checks");
  add_format(verify);
  verify->add_option("--seed", o.seed, "seed for edge orders and random graphs");
  verify->add_option("--max-edges", o.max_edges, "edge cap for digraph and Veblen corpora (at most 8)");
  verify->add_option("--max-vertices", o.max_vertices, "vertex cap for the simple graph corpus (at most 6)");
  verify->add_flag("--flip-top-sign", o.flip_top_sign, "negate F at the top of T(D) (mutation run, must fail)");

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  bool ok = true;
  json out;
  try {
    if (command == "circuits") out = cmd_circuits(o);
    else if (command == "martin") out = cmd_martin(o);
    else if (command == "cancellation") out = cmd_cancellation(o, ok);
    else if (command == "identity") out = cmd_identity(o, ok);
    else if (command == "lattice-dump") out = cmd_lattice_dump(o);
    else if (command == "nbc") out = cmd_nbc(o);
    else if (command == "chromatic") out = cmd_chromatic(o, ok);
    else if (command == "bijection-check") out = cmd_bijection_check(o, ok);
    else if (command == "pyramids") out = cmd_pyramids(o);
    else if (command == "charpoly") out = cmd_charpoly(o);
    else if (command == "weight") out = cmd_weight(o);
    else out = cmd_verify(o, ok);
  } catch (const std::exception& e) {
    std::cerr << "circpart " << command << ": " << e.what() << '\n';
    return 2;
  }
  if (o.format == "text")
    print_text(out, std::cout);
  else
    std::cout << out.dump(2) << '\n';
  return ok ? 0 : 1;
}
