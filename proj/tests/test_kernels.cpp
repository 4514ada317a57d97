#include <doctest.h>

#include <cstdlib>
#include <random>
#include <vector>

#include "coherent/kernels.hpp"

using namespace coherent::kernels;

namespace {

struct Case {
  std::vector<std::int32_t> xs, ys;
  std::vector<std::int64_t> table;
};

Case random_case(std::mt19937_64& rng, int max_len, int max_value) {
  std::uniform_int_distribution<int> len(0, max_len), val(0, max_value);
  Case c;
  c.xs.resize(static_cast<std::size_t>(len(rng)));
  c.ys.resize(static_cast<std::size_t>(len(rng)));
  for (auto& x : c.xs) x = val(rng);
  for (auto& y : c.ys) y = val(rng);
  std::uniform_int_distribution<std::int64_t> entry(-(1LL << 40), 1LL << 40);
  c.table.resize(static_cast<std::size_t>(max_value) + 1);
  for (auto& t : c.table) t = entry(rng);
  return c;
}

std::int64_t naive_sum(const Case& c) {
  std::int64_t s = 0;
  for (auto x : c.xs)
    for (auto y : c.ys) s += c.table[static_cast<std::size_t>(std::abs(x - y))];
  return s;
}

std::int64_t naive_count(const Case& c, std::int64_t scale, std::int64_t threshold, bool strict) {
  std::int64_t n = 0;
  for (auto x : c.xs)
    for (auto y : c.ys) {
      const std::int64_t v = scale * std::abs(x - y);
      n += strict ? (v > threshold) : (v >= threshold);
    }
  return n;
}

}  // namespace

TEST_CASE("scalar kernels against a direct loop") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 500; ++t) {
    const auto c = random_case(rng, 23, 30);
    CHECK(scalar::abs_diff_table_sum(c.xs, c.ys, c.table) == naive_sum(c));
    std::uniform_int_distribution<std::int64_t> sc(0, 50), th(-5, 1500);
    const auto s = sc(rng), h = th(rng);
    for (bool strict : {true, false}) CHECK(scalar::count_abs_diff_exceeding(c.xs, c.ys, s, h, strict) == naive_count(c, s, h, strict));
  }
}

TEST_CASE("count boundary: strict versus non-strict") {
  const std::vector<std::int32_t> xs{0, 1, 2, 3, 4, 5, 6, 7, 8}, ys{0};
  CHECK(scalar::count_abs_diff_exceeding(xs, ys, 2, 8, true) == 4);
  CHECK(scalar::count_abs_diff_exceeding(xs, ys, 2, 8, false) == 5);
  CHECK(count_abs_diff_exceeding(xs, ys, 2, 8, true) == 4);
  CHECK(count_abs_diff_exceeding(xs, ys, 2, 8, false) == 5);
}

#if defined(COHERENT_HAVE_AVX2)
TEST_CASE("avx2 kernels match the scalar reference") {
  if (detected_isa() != Isa::avx2) {
    MESSAGE("CPU lacks AVX2; equivalence not exercised");
    return;
  }
  std::mt19937_64 rng(2);
  for (int t = 0; t < 3000; ++t) {
    // Lengths straddle the 8- and 4-lane widths so remainder loops run.
    const auto c = random_case(rng, 37, 40);
    CHECK(avx2::abs_diff_table_sum(c.xs, c.ys, c.table) == scalar::abs_diff_table_sum(c.xs, c.ys, c.table));
    std::uniform_int_distribution<std::int64_t> sc(0, 1000), th(-10, 40000);
    const auto s = sc(rng), h = th(rng);
    for (bool strict : {true, false})
      CHECK(avx2::count_abs_diff_exceeding(c.xs, c.ys, s, h, strict) ==
            scalar::count_abs_diff_exceeding(c.xs, c.ys, s, h, strict));
  }
}

TEST_CASE("large scales fall back to scalar and still agree") {
  const std::vector<std::int32_t> xs{0, 3, 5, 9, 11}, ys{1, 2, 10};
  const std::int64_t big = 1LL << 40;
  for (bool strict : {true, false}) {
    Case c{xs, ys, {}};
    CHECK(count_abs_diff_exceeding(xs, ys, big, 5 * big, strict) == naive_count(c, big, 5 * big, strict));
  }
}
#endif

TEST_CASE("dispatch can be pinned") {
  force_isa(Isa::scalar);
  CHECK(active_isa() == Isa::scalar);
  reset_isa();
  CHECK(active_isa() == detected_isa());
  CHECK(isa_name(Isa::scalar) == "scalar");
  CHECK(isa_name(Isa::avx2) == "avx2");
}
