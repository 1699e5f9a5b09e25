#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "circpart/graph.hpp"

namespace circpart {

// Outcome of one corpus check: how many items ran, how many failed, and the
// first failing item in words.
struct CheckResult {
  explicit CheckResult(std::string check_name = {}) : name(std::move(check_name)) {}

  std::string name;
  std::int64_t items = 0;
  std::int64_t failures = 0;
  std::string first_failure;
  nlohmann::json details = nlohmann::json::object();
  bool passed() const { return failures == 0 && items > 0; }
  void fail(const std::string& what);
  nlohmann::json to_json() const;
};

struct VerifyConfig {
  std::uint64_t seed = 1;
  int max_edges = 8;      // Eulerian digraph and Veblen corpora
  int max_vertices = 6;   // simple graph corpus
  int spot_vertices = 7;  // named and random spot graphs for the characteristic polynomial
  int spot_random = 48;
  int orders_per_graph = 3;
  // Mutation smoke test: negate F at the top of every semilattice.
  bool flip_top_sign = false;
};

// Compact one-line description used in failure messages.
std::string describe(const Digraph& d);
std::string describe(const Multigraph& x);
std::string describe(const SimpleGraph& g);

CheckResult check_running_example(bool flip_top_sign = false);
CheckResult check_cancellation(const std::vector<Digraph>& corpus, bool flip_top_sign = false);
CheckResult check_mobius(const std::vector<Digraph>& corpus, bool flip_top_sign = false);
CheckResult check_martin_identities(const std::vector<Digraph>& corpus);
CheckResult check_best(const std::vector<Digraph>& corpus);
CheckResult check_trail_pyramids(const std::vector<Digraph>& corpus);
CheckResult check_pyramid_balance(const std::vector<Digraph>& corpus);
CheckResult check_bijections(const std::vector<SimpleGraph>& graphs, int orders_per_graph, std::uint64_t seed);
CheckResult check_chromatic(const std::vector<SimpleGraph>& graphs, std::uint64_t seed);
CheckResult check_charpoly(const std::vector<SimpleGraph>& graphs);
CheckResult check_veblen(const std::vector<Multigraph>& corpus);

// Connected Veblen multigraphs with at most max_edges edges: the isomorphism
// corpus together with the connected infragraphs of K5.
std::vector<Multigraph> veblen_check_corpus(int max_edges);
// Connected simple graphs on at most max_vertices vertices plus the spot graphs.
std::vector<SimpleGraph> charpoly_check_corpus(const VerifyConfig& config);

struct VerifyReport {
  nlohmann::json report;
  bool passed = false;
};
// Runs every check in a fixed order. Contains no timings, so identical
// configurations give byte-identical reports.
VerifyReport run_verification_suite(const VerifyConfig& config);

}  // namespace circpart
