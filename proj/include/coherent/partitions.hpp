#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coherent/rational.hpp"

namespace coherent {

// A sequence of n integers, each in [0, n]: a Ferrer shape inside the n x n
// box once sorted.  Storage keeps the caller's order; operations that need
// the canonical (weakly decreasing) form sort on entry.
class Partition {
 public:
  Partition() = default;
  /// Throws ValidationError unless n >= 1, parts.size() == n and 0 <= parts[i] <= n.
  Partition(int n, std::vector<int> parts);

  int n() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  long long total() const;
  bool is_canonical() const;
  Partition sorted() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  int n_ = 0;
  std::vector<int> parts_;
};

/// b*_k = #{i : b_i >= k} for k = 1..n.  Accepts unsorted b.
Partition conjugate(const Partition& b);

// Prefix sums of both sequences after a descending sort, and where (if
// anywhere) x stops dominating y.
template <class T>
struct MajorizationTrace {
  std::vector<T> x_prefix;
  std::vector<T> y_prefix;
  std::optional<std::size_t> first_failure;  // 0-based prefix index with x_prefix < y_prefix
  bool totals_equal = false;

  bool holds() const { return !first_failure && totals_equal; }
};

template <class T>
MajorizationTrace<T> majorization_trace(std::span<const T> x, std::span<const T> y) {
  if (x.size() != y.size())
    throw ValidationError("majorization needs equal lengths (" + std::to_string(x.size()) + " vs " +
                          std::to_string(y.size()) + ")");
  std::vector<T> xs(x.begin(), x.end());
  std::vector<T> ys(y.begin(), y.end());
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::sort(ys.begin(), ys.end(), std::greater<>());

  MajorizationTrace<T> trace;
  trace.x_prefix.reserve(xs.size());
  trace.y_prefix.reserve(ys.size());
  T sx{0}, sy{0};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    trace.x_prefix.push_back(sx);
    trace.y_prefix.push_back(sy);
    if (!trace.first_failure && sx < sy) trace.first_failure = i;
  }
  trace.totals_equal = (sx == sy);
  return trace;
}

/// x majorizes y: sorted prefix sums of x dominate those of y and the totals agree.
template <class T>
bool majorizes(std::span<const T> x, std::span<const T> y) {
  return majorization_trace(x, y).holds();
}

bool majorizes(const std::vector<long long>& x, const std::vector<long long>& y);
bool majorizes(const std::vector<Rational>& x, const std::vector<Rational>& y);

/// Gale-Ryser: (a, b) are the two degree sequences of some bipartite graph
/// iff conjugate(b) majorizes a.
bool is_bigraphic(const Partition& a, const Partition& b);
MajorizationTrace<long long> bigraphic_trace(const Partition& a, const Partition& b);

using ConvexFn = std::function<Rational(const Rational&)>;

/// t -> |t - shift|^k.
ConvexFn shifted_power(Rational shift, unsigned k);

/// Σ f(x_i) - Σ f(y_j), which Karamata's inequality makes >= 0 when x majorizes y.
/// Throws ValidationError naming the failing prefix (or the total) otherwise.
Rational karamata_compare(const ConvexFn& f, std::span<const Rational> x,
                          std::span<const Rational> y);

std::vector<Rational> to_rationals(std::span<const int> values);

}  // namespace coherent
