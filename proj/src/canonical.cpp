#include "circpart/canonical.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "circpart/error.hpp"

namespace circpart {

namespace {

class Canonizer {
 public:
  Canonizer(int n, const std::vector<int>& matrix) : n_(n), m_(matrix) {}

  std::string run() {
    std::vector<int> colour(static_cast<std::size_t>(n_), 0);
    search(refine(colour));
    return best_;
  }

 private:
  int at(int u, int v) const { return m_[static_cast<std::size_t>(u * n_ + v)]; }

  // Equitable refinement; new colours are ranks of label-free signatures,
  // so the result is invariant under relabeling.
  std::vector<int> refine(std::vector<int> colour) const {
    int classes = -1;
    while (true) {
      using Signature = std::tuple<int, std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>;
      std::vector<Signature> sig(static_cast<std::size_t>(n_));
      for (int u = 0; u < n_; ++u) {
        std::vector<std::pair<int, int>> out, in;
        for (int v = 0; v < n_; ++v) {
          if (v == u) continue;
          if (at(u, v)) out.emplace_back(colour[static_cast<std::size_t>(v)], at(u, v));
          if (at(v, u)) in.emplace_back(colour[static_cast<std::size_t>(v)], at(v, u));
        }
        std::sort(out.begin(), out.end());
        std::sort(in.begin(), in.end());
        sig[static_cast<std::size_t>(u)] = {colour[static_cast<std::size_t>(u)], std::move(out), std::move(in)};
      }
      std::vector<Signature> distinct = sig;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (int u = 0; u < n_; ++u)
        colour[static_cast<std::size_t>(u)] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(u)]) - distinct.begin());
      int now = static_cast<int>(distinct.size());
      if (now == classes) return colour;
      classes = now;
    }
  }

  void search(const std::vector<int>& colour) {
    // First colour class (in colour order) with more than one vertex.
    std::vector<int> count(static_cast<std::size_t>(n_), 0);
    for (int c : colour) ++count[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < n_ && target < 0; ++c)
      if (count[static_cast<std::size_t>(c)] > 1) target = c;
    if (target < 0) {
      std::vector<int> order(static_cast<std::size_t>(n_));
      for (int u = 0; u < n_; ++u) order[static_cast<std::size_t>(colour[static_cast<std::size_t>(u)])] = u;
      std::string s(1, static_cast<char>(n_));
      for (int a : order)
        for (int b : order) s.push_back(static_cast<char>(at(a, b)));
      if (best_.empty() || s < best_) best_ = std::move(s);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (colour[static_cast<std::size_t>(v)] != target) continue;
      std::vector<int> next(static_cast<std::size_t>(n_));
      for (int u = 0; u < n_; ++u)
        next[static_cast<std::size_t>(u)] = 2 * colour[static_cast<std::size_t>(u)] + (colour[static_cast<std::size_t>(u)] == target && u != v);
      search(refine(next));
    }
  }

  int n_;
  const std::vector<int>& m_;
  std::string best_;
};

}  // namespace

std::string canonical_form(int n, const std::vector<int>& matrix) {
  if (n > 16) throw SizeError("canonical forms are capped at 16 vertices");
  if (matrix.size() != static_cast<std::size_t>(n * n)) throw PreconditionError("matrix size does not match vertex count");
  if (n == 0) return std::string(1, '\0');
  return Canonizer(n, matrix).run();
}

std::string canonical_form(const Digraph& d) {
  const int n = d.num_vertices();
  std::vector<int> m(static_cast<std::size_t>(n * n), 0);
  for (const Arc& a : d.arcs()) ++m[static_cast<std::size_t>(a.tail * n + a.head)];
  return canonical_form(n, m);
}

std::string canonical_form(const Multigraph& x) {
  const int n = x.num_vertices();
  std::vector<int> m(static_cast<std::size_t>(n * n), 0);
  for (const Ends& a : x.edges()) {
    ++m[static_cast<std::size_t>(a.u * n + a.v)];
    ++m[static_cast<std::size_t>(a.v * n + a.u)];
  }
  return canonical_form(n, m);
}

std::string canonical_form(const SimpleGraph& g) { return canonical_form(g.as_multigraph()); }

}  // namespace circpart
