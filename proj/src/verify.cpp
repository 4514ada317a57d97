#include "coherent/verify.hpp"

#include <cmath>
#include <random>
#include <set>

#include "coherent/bounds.hpp"
#include "coherent/graphs.hpp"
#include "coherent/matrices.hpp"
#include "coherent/partitions.hpp"
#include "coherent/search.hpp"

namespace coherent::verify {

namespace {

void fail(SuiteResult& r, std::string detail) {
  if (r.passed) r.detail = std::move(detail);
  r.passed = false;
}

CoherentMatrixPair random_pair(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 5);
  std::uniform_int_distribution<int> weight(0, 6), frac(0, 4);
  const std::size_t rows = size(rng), cols = size(rng);
  std::vector<int> raw(rows * cols);
  long long total = 0;
  for (auto& x : raw) total += (x = weight(rng));
  if (total == 0) total = raw[0] = 1;
  RationalMatrix a(rows, cols), b(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      b(i, j) = make_rational(raw[i * cols + j], total);
      a(i, j) = b(i, j) * make_rational(frac(rng), 4);
    }
  return CoherentMatrixPair(std::move(a), std::move(b));
}

}  // namespace

SuiteResult slicing(int trials, std::uint64_t seed) {
  SuiteResult r;
  r.name = "slicing";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> steps(1, 4), mult(1, 4), coin(0, 1);
  for (int t = 0; t < trials; ++t) {
    CoherentMatrixPair p = random_pair(rng);
    std::vector<Rational> before;
    for (unsigned k = 2; k <= 5; ++k) before.push_back(phi(p, k));
    const int ops = steps(rng);
    for (int o = 0; o < ops; ++o) {
      const auto l = static_cast<unsigned>(mult(rng));
      if (coin(rng)) {
        p = slice_row(p, std::uniform_int_distribution<std::size_t>(0, p.rows() - 1)(rng), l);
      } else {
        p = slice_col(p, std::uniform_int_distribution<std::size_t>(0, p.cols() - 1)(rng), l);
      }
    }
    for (unsigned k = 2; k <= 5; ++k) {
      ++r.checked;
      if (phi(p, k) != before[k - 2])
        fail(r, "trial " + std::to_string(t) + ", k=" + std::to_string(k) + ": phi changed");
    }
  }
  return r;
}

SuiteResult gale_ryser(int n_max) {
  SuiteResult r;
  r.name = "galeryser";
  for (int n = 1; n <= n_max; ++n) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> realized;
    for (std::uint64_t bits = 0; bits < (1ULL << (n * n)); ++bits) {
      auto d = degrees(BipartiteGraph::from_bits(n, bits));
      std::sort(d.x.begin(), d.x.end(), std::greater<>());
      std::sort(d.y.begin(), d.y.end(), std::greater<>());
      realized.emplace(std::move(d.x), std::move(d.y));
    }
    const auto all = enumerate_box_partitions(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        ++r.checked;
        const bool brute = realized.contains({a.parts(), b.parts()});
        if (is_bigraphic(a, b) != brute) fail(r, "n=" + std::to_string(n) + ": disagreement with brute force");
      }
  }
  return r;
}

SuiteResult chord(int trials, std::uint64_t seed) {
  SuiteResult r;
  r.name = "chord";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> m_dist(1, 20), dim_dist(1, 10);
  std::uniform_real_distribution<double> radius(0.1, 5.0), offset(-3.0, 3.0);
  std::normal_distribution<double> gauss;
  auto check = [&](const SpherePoints& pts, const std::string& label) {
    ++r.checked;
    const auto c = chord_sum_check(pts);
    const double m = static_cast<double>(pts.points.size());
    if (std::abs(c.lhs - c.rhs) > 1e-9 * m * m * std::max(1.0, std::abs(c.lhs)))
      fail(r, label + ": lhs " + format_float(c.lhs) + " vs rhs " + format_float(c.rhs));
  };
  for (int t = 0; t < trials; ++t) {
    const int m = m_dist(rng), dim = dim_dist(rng);
    SpherePoints s;
    s.radius = radius(rng);
    for (int i = 0; i < dim; ++i) s.center.push_back(offset(rng));
    for (int i = 0; i < m; ++i) {
      std::vector<double> v(static_cast<std::size_t>(dim));
      double norm = 0;
      while (norm < 1e-6) {
        norm = 0;
        for (auto& x : v) {
          x = gauss(rng);
          norm += x * x;
        }
      }
      norm = std::sqrt(norm);
      for (std::size_t d = 0; d < v.size(); ++d) v[d] = s.center[d] + s.radius * v[d] / norm;
      s.points.push_back(std::move(v));
    }
    check(s, "configuration " + std::to_string(t));
  }
  for (int n = 2; n <= 20; n += 2)
    for (int den : {2, 3, 5, 10}) check(equality_sphere_points(n, make_rational(1, den)), "equality n=" + std::to_string(n));
  return r;
}

SuiteResult zagreb(int n_max) {
  SuiteResult r;
  r.name = "zagreb";
  for (int n = 1; n <= n_max; ++n) {
    std::vector<long long> best(static_cast<std::size_t>(n * n + 1), -1);
    for (std::uint64_t bits = 0; bits < (1ULL << (n * n)); ++bits) {
      const auto g = BipartiteGraph::from_bits(n, bits);
      const long long e = g.edge_count(), m1 = zagreb_m1(g);
      best[static_cast<std::size_t>(e)] = std::max(best[static_cast<std::size_t>(e)], m1);
      ++r.checked;
      if (4LL * n * m1 > 1LL * n * n * n * n + 8 * e * e)
        fail(r, "n=" + std::to_string(n) + ": n*M1 exceeds n^4/4 + 2e^2");
    }
    for (long long e = 0; e <= n * n; ++e) {
      ++r.checked;
      const long long m = best[static_cast<std::size_t>(e)];
      if (m != m1_upper(n, e) || m != zagreb_m1(extremal_b1(n, e)))
        fail(r, "n=" + std::to_string(n) + ", e=" + std::to_string(e) + ": max M1 " + std::to_string(m) +
                    " vs bound " + std::to_string(m1_upper(n, e)));
    }
  }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"slicing", "galeryser", "chord", "zagreb"};
  return names;
}

std::vector<SuiteResult> run_suite(const std::string& name) {
  if (name == "all") return {slicing(), gale_ryser(), chord(), zagreb()};
  if (name == "slicing") return {slicing()};
  if (name == "galeryser" || name == "garyser") return {gale_ryser()};
  if (name == "chord") return {chord()};
  if (name == "zagreb") return {zagreb()};
  throw ValidationError("unknown suite '" + name + "'; expected all, slicing, galeryser, chord or zagreb");
}

}  // namespace coherent::verify
