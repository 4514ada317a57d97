#include <atomic>
#include <cstdlib>
#include <limits>

#include "coherent/kernels.hpp"

namespace coherent::kernels {

namespace {

// -1 means "no override".
std::atomic<int> forced{-1};

bool cpu_has_avx2() {
#if defined(COHERENT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() {
  if (const char* env = std::getenv("COHERENT_FORCE_SCALAR"); env && *env && *env != '0')
    return Isa::scalar;
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
  static const Isa isa = detect();
  return isa;
}

Isa active_isa() {
  const int f = forced.load(std::memory_order_relaxed);
  if (f >= 0) return static_cast<Isa>(f);
  return detected_isa();
}

void force_isa(Isa isa) {
  if (isa == Isa::avx2 && !cpu_has_avx2()) isa = Isa::scalar;
  forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() { forced.store(-1, std::memory_order_relaxed); }

std::int64_t abs_diff_table_sum(std::span<const std::int32_t> xs, std::span<const std::int32_t> ys,
                                std::span<const std::int64_t> table) {
#if defined(COHERENT_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::abs_diff_table_sum(xs, ys, table);
#endif
  return scalar::abs_diff_table_sum(xs, ys, table);
}

std::int64_t count_abs_diff_exceeding(std::span<const std::int32_t> xs,
                                      std::span<const std::int32_t> ys, std::int64_t scale,
                                      std::int64_t threshold, bool strict) {
#if defined(COHERENT_HAVE_AVX2)
  // The vector path multiplies in 32x32->64 lanes.
  if (active_isa() == Isa::avx2 && scale >= 0 && scale <= std::numeric_limits<std::int32_t>::max())
    return avx2::count_abs_diff_exceeding(xs, ys, scale, threshold, strict);
#endif
  return scalar::count_abs_diff_exceeding(xs, ys, scale, threshold, strict);
}

}  // namespace coherent::kernels
