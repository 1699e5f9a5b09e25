#include "circpart/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace circpart {

std::int64_t integer_determinant(const std::vector<std::vector<std::int64_t>>& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    a[i].assign(matrix[i].begin(), matrix[i].end());
  }
  __int128 sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  __int128 det = sign * a[n - 1][n - 1];
  if (det > INT64_MAX || det < INT64_MIN) throw std::overflow_error("determinant exceeds int64");
  return static_cast<std::int64_t>(det);
}

}  // namespace circpart
