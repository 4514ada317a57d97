#include <cstdlib>

#include "coherent/kernels.hpp"

namespace coherent::kernels::scalar {

std::int64_t abs_diff_table_sum(std::span<const std::int32_t> xs, std::span<const std::int32_t> ys,
                                std::span<const std::int64_t> table) {
  std::int64_t total = 0;
  for (std::int32_t x : xs)
    for (std::int32_t y : ys) total += table[static_cast<std::size_t>(std::abs(x - y))];
  return total;
}

std::int64_t count_abs_diff_exceeding(std::span<const std::int32_t> xs,
                                      std::span<const std::int32_t> ys, std::int64_t scale,
                                      std::int64_t threshold, bool strict) {
  std::int64_t count = 0;
  for (std::int32_t x : xs) {
    for (std::int32_t y : ys) {
      const std::int64_t lhs = scale * std::abs(static_cast<std::int64_t>(x) - y);
      count += strict ? (lhs > threshold) : (lhs >= threshold);
    }
  }
  return count;
}

}  // namespace coherent::kernels::scalar
