#pragma once

#include <cstdint>
#include <vector>

namespace circpart {

// Exact determinant by fraction-free (Bareiss) elimination with 128-bit
// intermediates; throws std::overflow_error if the result leaves int64.
std::int64_t integer_determinant(const std::vector<std::vector<std::int64_t>>& matrix);

}  // namespace circpart
