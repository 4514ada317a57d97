#pragma once

// Integer inner loops of the degree-sequence objectives.
//
// Every objective the search scores reduces to a double loop over two short
// integer sequences (x-degrees against y-degrees, or a partition against its
// conjugate).  The scalar versions are the reference; the AVX2 versions must
// agree with them bit for bit and are selected at runtime when the CPU has
// AVX2.

#include <cstdint>
#include <span>
#include <string_view>

namespace coherent::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Best instruction set the running CPU supports and this build carries.
Isa detected_isa();

/// Instruction set used by the dispatching entry points below.
Isa active_isa();

/// Pins the dispatching entry points to `isa` (falls back to scalar when
/// `isa` is unavailable). Intended for tests and benchmarks.
void force_isa(Isa isa);

/// Clears any force_isa override.
void reset_isa();

// Σ_i Σ_j table[|xs[i] - ys[j]|].
// Preconditions: every |xs[i] - ys[j]| indexes into table; the caller
// guarantees the sum fits in int64.
std::int64_t abs_diff_table_sum(std::span<const std::int32_t> xs, std::span<const std::int32_t> ys,
                                std::span<const std::int64_t> table);

// #{(i, j) : scale * |xs[i] - ys[j]| > threshold}, or >= when strict is false.
// Precondition: scale * |xs[i] - ys[j]| fits in int64 and scale >= 0.
std::int64_t count_abs_diff_exceeding(std::span<const std::int32_t> xs,
                                      std::span<const std::int32_t> ys, std::int64_t scale,
                                      std::int64_t threshold, bool strict);

namespace scalar {
std::int64_t abs_diff_table_sum(std::span<const std::int32_t> xs, std::span<const std::int32_t> ys,
                                std::span<const std::int64_t> table);
std::int64_t count_abs_diff_exceeding(std::span<const std::int32_t> xs,
                                      std::span<const std::int32_t> ys, std::int64_t scale,
                                      std::int64_t threshold, bool strict);
}  // namespace scalar

#if defined(COHERENT_HAVE_AVX2)
namespace avx2 {
std::int64_t abs_diff_table_sum(std::span<const std::int32_t> xs, std::span<const std::int32_t> ys,
                                std::span<const std::int64_t> table);
std::int64_t count_abs_diff_exceeding(std::span<const std::int32_t> xs,
                                      std::span<const std::int32_t> ys, std::int64_t scale,
                                      std::int64_t threshold, bool strict);
}  // namespace avx2
#endif

}  // namespace coherent::kernels
