#include "circpart/poset.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "circpart/error.hpp"
#include "circpart/polynomial.hpp"

namespace circpart {

namespace {

template <class F>
void for_each_set(const std::uint64_t* row, std::size_t words, F&& f) {
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t m = row[w];
    while (m) {
      f(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(m))));
      m &= m - 1;
    }
  }
}

}  // namespace

FinitePoset::FinitePoset(int n, const std::function<bool(int, int)>& leq) : n_(n) {
  if (n < 0) throw PreconditionError("negative poset size");
  if (n > kMaxElements) throw SizeError("poset has " + std::to_string(n) + " elements; the cap is 2^15");
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  up_.assign(static_cast<std::size_t>(n) * words_, 0);
  down_.assign(static_cast<std::size_t>(n) * words_, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a == b || leq(a, b)) {
        up_[static_cast<std::size_t>(a) * words_ + static_cast<std::size_t>(b) / 64] |= std::uint64_t{1} << (b % 64);
        down_[static_cast<std::size_t>(b) * words_ + static_cast<std::size_t>(a) / 64] |= std::uint64_t{1} << (a % 64);
      }
  std::vector<int> down_size(static_cast<std::size_t>(n), 0);
  for (int b = 0; b < n; ++b)
    for_each_set(&down_[static_cast<std::size_t>(b) * words_], words_, [&](int) { ++down_size[static_cast<std::size_t>(b)]; });
  order_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order_[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order_.begin(), order_.end(),
                   [&](int x, int y) { return down_size[static_cast<std::size_t>(x)] < down_size[static_cast<std::size_t>(y)]; });
}

void FinitePoset::check(int a) const {
  if (a < 0 || a >= n_) throw PreconditionError("unknown poset element " + std::to_string(a));
}

bool FinitePoset::leq(int a, int b) const {
  check(a);
  check(b);
  return (up_[static_cast<std::size_t>(a) * words_ + static_cast<std::size_t>(b) / 64] >> (b % 64)) & 1U;
}

std::vector<int> FinitePoset::down_set(int b) const {
  check(b);
  std::vector<int> out;
  for_each_set(&down_[static_cast<std::size_t>(b) * words_], words_, [&](int a) { out.push_back(a); });
  return out;
}

std::vector<int> FinitePoset::up_set(int a) const {
  check(a);
  std::vector<int> out;
  for_each_set(&up_[static_cast<std::size_t>(a) * words_], words_, [&](int b) { out.push_back(b); });
  return out;
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> out;
  for (int b = 0; b < n_; ++b)
    if (down_set(b).size() == 1) out.push_back(b);
  return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a)
    if (up_set(a).size() == 1) out.push_back(a);
  return out;
}

const std::vector<std::int64_t>& FinitePoset::mobius_column(int b) const {
  check(b);
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->columns.find(b);
  if (it != cache_->columns.end()) return it->second;
  // mu(a,b) = -sum_{a < z <= b} mu(z,b), processed from the top of the down-set.
  std::vector<std::int64_t> col(static_cast<std::size_t>(n_), 0);
  const std::uint64_t* down_b = &down_[static_cast<std::size_t>(b) * words_];
  for (auto r = order_.rbegin(); r != order_.rend(); ++r) {
    int a = *r;
    if (!((down_b[static_cast<std::size_t>(a) / 64] >> (a % 64)) & 1U)) continue;
    if (a == b) {
      col[static_cast<std::size_t>(a)] = 1;
      continue;
    }
    std::int64_t s = 0;
    const std::uint64_t* up_a = &up_[static_cast<std::size_t>(a) * words_];
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t m = up_a[w] & down_b[w];
      while (m) {
        int z = static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(m)));
        if (z != a) s = checked_add(s, col[static_cast<std::size_t>(z)]);
        m &= m - 1;
      }
    }
    col[static_cast<std::size_t>(a)] = -s;
  }
  return cache_->columns.emplace(b, std::move(col)).first->second;
}

const std::vector<std::int64_t>& FinitePoset::mobius_row(int a) const {
  check(a);
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->rows.find(a);
  if (it != cache_->rows.end()) return it->second;
  // mu(a,b) = -sum_{a <= z < b} mu(a,z), processed from the bottom of the up-set.
  std::vector<std::int64_t> row(static_cast<std::size_t>(n_), 0);
  const std::uint64_t* up_a = &up_[static_cast<std::size_t>(a) * words_];
  for (int b : order_) {
    if (!((up_a[static_cast<std::size_t>(b) / 64] >> (b % 64)) & 1U)) continue;
    if (a == b) {
      row[static_cast<std::size_t>(b)] = 1;
      continue;
    }
    std::int64_t s = 0;
    const std::uint64_t* down_b = &down_[static_cast<std::size_t>(b) * words_];
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t m = up_a[w] & down_b[w];
      while (m) {
        int z = static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(m)));
        if (z != b) s = checked_add(s, row[static_cast<std::size_t>(z)]);
        m &= m - 1;
      }
    }
    row[static_cast<std::size_t>(b)] = -s;
  }
  return cache_->rows.emplace(a, std::move(row)).first->second;
}

std::int64_t FinitePoset::mobius(int a, int b) const {
  check(a);
  return mobius_column(b)[static_cast<std::size_t>(a)];
}

FinitePoset FinitePoset::restrict(const std::vector<int>& elements) const {
  for (int e : elements) check(e);
  return FinitePoset(static_cast<int>(elements.size()), [&](int i, int j) {
    return leq(elements[static_cast<std::size_t>(i)], elements[static_cast<std::size_t>(j)]);
  });
}

}  // namespace circpart
