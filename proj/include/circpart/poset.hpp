#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace circpart {

// Finite poset on elements 0..n-1 with an explicit order matrix.
class FinitePoset {
 public:
  static constexpr int kMaxElements = 1 << 15;

  FinitePoset() = default;
  // leq(a, b) must be a partial order; reflexivity is enforced.
  FinitePoset(int n, const std::function<bool(int, int)>& leq);

  int size() const { return n_; }
  bool leq(int a, int b) const;
  bool less(int a, int b) const { return a != b && leq(a, b); }
  std::vector<int> down_set(int b) const;
  std::vector<int> up_set(int a) const;
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  // Elements sorted so that a < b implies a comes first.
  const std::vector<int>& linear_extension() const { return order_; }

  // Möbius function; 0 when a is not below b. Columns mu(., b) are computed
  // by recursion over the down-set of b and cached.
  std::int64_t mobius(int a, int b) const;
  // mu(a, .) over the up-set of a, cached.
  const std::vector<std::int64_t>& mobius_row(int a) const;
  const std::vector<std::int64_t>& mobius_column(int b) const;

  // Induced subposet on the listed elements, in the given order.
  FinitePoset restrict(const std::vector<int>& elements) const;

 private:
  void check(int a) const;
  struct Cache {
    std::mutex mu;
    std::map<int, std::vector<std::int64_t>> rows;
    std::map<int, std::vector<std::int64_t>> columns;
  };
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> up_;    // row a: bitset of b with a <= b
  std::vector<std::uint64_t> down_;  // row b: bitset of a with a <= b
  std::vector<int> order_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace circpart
