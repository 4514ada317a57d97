// Compiled with -mavx2; only reached through the runtime dispatcher.
#include <immintrin.h>

#include <cstdlib>

#include "coherent/kernels.hpp"

namespace coherent::kernels::avx2 {

namespace {

std::int64_t horizontal_sum(__m256i v) {
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

}  // namespace

std::int64_t abs_diff_table_sum(std::span<const std::int32_t> xs, std::span<const std::int32_t> ys,
                                std::span<const std::int64_t> table) {
  const auto* base = reinterpret_cast<const long long*>(table.data());
  const std::size_t m = ys.size();
  __m256i acc_lo = _mm256_setzero_si256();
  __m256i acc_hi = _mm256_setzero_si256();
  std::int64_t tail = 0;

  for (std::int32_t x : xs) {
    const __m256i vx = _mm256_set1_epi32(x);
    std::size_t j = 0;
    for (; j + 8 <= m; j += 8) {
      const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ys.data() + j));
      const __m256i idx = _mm256_abs_epi32(_mm256_sub_epi32(vx, vy));
      acc_lo = _mm256_add_epi64(acc_lo, _mm256_i32gather_epi64(base, _mm256_castsi256_si128(idx), 8));
      acc_hi = _mm256_add_epi64(acc_hi,
                                _mm256_i32gather_epi64(base, _mm256_extracti128_si256(idx, 1), 8));
    }
    for (; j < m; ++j) tail += table[static_cast<std::size_t>(std::abs(x - ys[j]))];
  }
  return horizontal_sum(_mm256_add_epi64(acc_lo, acc_hi)) + tail;
}

std::int64_t count_abs_diff_exceeding(std::span<const std::int32_t> xs,
                                      std::span<const std::int32_t> ys, std::int64_t scale,
                                      std::int64_t threshold, bool strict) {
  // Integer comparison: lhs >= t  <=>  lhs > t - 1.
  const std::int64_t cut = strict ? threshold : threshold - 1;
  const __m256i vcut = _mm256_set1_epi64x(cut);
  const __m256i vscale = _mm256_set1_epi64x(scale);
  const std::size_t m = ys.size();
  __m256i acc = _mm256_setzero_si256();
  std::int64_t tail = 0;

  for (std::int32_t x : xs) {
    const __m128i vx = _mm_set1_epi32(x);
    std::size_t j = 0;
    for (; j + 4 <= m; j += 4) {
      const __m128i vy = _mm_loadu_si128(reinterpret_cast<const __m128i*>(ys.data() + j));
      const __m128i diff = _mm_abs_epi32(_mm_sub_epi32(vx, vy));
      // mul_epi32 multiplies the low signed 32 bits of each 64-bit lane.
      const __m256i lhs = _mm256_mul_epi32(_mm256_cvtepi32_epi64(diff), vscale);
      acc = _mm256_sub_epi64(acc, _mm256_cmpgt_epi64(lhs, vcut));
    }
    for (; j < m; ++j) {
      const std::int64_t lhs = scale * std::abs(static_cast<std::int64_t>(x) - ys[j]);
      tail += lhs > cut;
    }
  }
  return horizontal_sum(acc) + tail;
}

}  // namespace coherent::kernels::avx2
