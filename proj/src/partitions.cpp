#include "coherent/partitions.hpp"

#include <numeric>

namespace coherent {

Partition::Partition(int n, std::vector<int> parts) : n_(n), parts_(std::move(parts)) {
  if (n_ < 1) throw ValidationError("box size must be positive, got " + std::to_string(n_));
  if (parts_.size() != static_cast<std::size_t>(n_))
    throw ValidationError("partition in a " + std::to_string(n_) + "-box needs " +
                          std::to_string(n_) + " parts, got " + std::to_string(parts_.size()));
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i] < 0 || parts_[i] > n_)
      throw ValidationError("part " + std::to_string(i) + " = " + std::to_string(parts_[i]) +
                            " outside [0, " + std::to_string(n_) + "]");
}

long long Partition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool Partition::is_canonical() const {
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::sorted() const {
  Partition p = *this;
  std::sort(p.parts_.begin(), p.parts_.end(), std::greater<>());
  return p;
}

Partition conjugate(const Partition& b) {
  const int n = b.n();
  // counts[v] = #{i : b_i == v}; suffix sums give #{i : b_i >= k}.
  std::vector<int> counts(static_cast<std::size_t>(n) + 2, 0);
  for (int part : b.parts()) ++counts[static_cast<std::size_t>(part)];
  std::vector<int> result(static_cast<std::size_t>(n));
  int at_least = 0;
  for (int k = n; k >= 1; --k) {
    at_least += counts[static_cast<std::size_t>(k)];
    result[static_cast<std::size_t>(k - 1)] = at_least;
  }
  return Partition(n, std::move(result));
}

bool majorizes(const std::vector<long long>& x, const std::vector<long long>& y) {
  return majorizes(std::span<const long long>(x), std::span<const long long>(y));
}

bool majorizes(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  return majorizes(std::span<const Rational>(x), std::span<const Rational>(y));
}

MajorizationTrace<long long> bigraphic_trace(const Partition& a, const Partition& b) {
  if (a.n() != b.n())
    throw ValidationError("box sizes differ: " + std::to_string(a.n()) + " vs " +
                          std::to_string(b.n()));
  const Partition bstar = conjugate(b);
  std::vector<long long> x(bstar.parts().begin(), bstar.parts().end());
  std::vector<long long> y(a.parts().begin(), a.parts().end());
  return majorization_trace(std::span<const long long>(x), std::span<const long long>(y));
}

bool is_bigraphic(const Partition& a, const Partition& b) { return bigraphic_trace(a, b).holds(); }

ConvexFn shifted_power(Rational shift, unsigned k) {
  return [shift = std::move(shift), k](const Rational& t) { return pow(abs(t - shift), k); };
}

Rational karamata_compare(const ConvexFn& f, std::span<const Rational> x,
                          std::span<const Rational> y) {
  const auto trace = majorization_trace(x, y);
  if (trace.first_failure) {
    const std::size_t i = *trace.first_failure;
    throw ValidationError("x does not majorize y: prefix " + std::to_string(i + 1) + " has " +
                          to_string(trace.x_prefix[i]) + " < " + to_string(trace.y_prefix[i]));
  }
  if (!trace.totals_equal)
    throw ValidationError("x does not majorize y: totals differ (" +
                          to_string(trace.x_prefix.back()) + " vs " +
                          to_string(trace.y_prefix.back()) + ")");
  Rational diff = 0;
  for (const auto& xi : x) diff += f(xi);
  for (const auto& yj : y) diff -= f(yj);
  return diff;
}

std::vector<Rational> to_rationals(std::span<const int> values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (int v : values) out.emplace_back(v);
  return out;
}

}  // namespace coherent
