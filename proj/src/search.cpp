#include "coherent/search.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <thread>

#include "coherent/bounds.hpp"
#include "coherent/kernels.hpp"

namespace coherent {

namespace {

// d^k for d = 0..n, when every Σ_ij |d|^k over an n x n grid fits in int64.
struct PowerTable {
  bool fits = false;
  std::vector<std::int64_t> table;

  PowerTable(int n, unsigned k) {
    mpz_class worst;
    mpz_ui_pow_ui(worst.get_mpz_t(), static_cast<unsigned long>(n), k + 2);
    if (worst >= mpz_class(std::numeric_limits<std::int64_t>::max() / 2)) return;
    fits = true;
    table.resize(static_cast<std::size_t>(n) + 1);
    for (int d = 0; d <= n; ++d) {
      std::int64_t v = 1;
      for (unsigned e = 0; e < k; ++e) v *= d;
      table[static_cast<std::size_t>(d)] = v;
    }
  }
};

// Conjugate of a weakly decreasing sequence into a preallocated buffer.
void conjugate_sorted(const std::vector<int>& parts, std::vector<std::int32_t>& out) {
  const int n = static_cast<int>(parts.size());
  int i = n;  // number of parts >= level, scanning levels upward
  for (int level = 1; level <= n; ++level) {
    while (i > 0 && parts[static_cast<std::size_t>(i - 1)] < level) --i;
    out[static_cast<std::size_t>(level - 1)] = i;
  }
}

mpz_class power_sum_exact(std::span<const std::int32_t> xs, std::span<const std::int32_t> ys,
                          unsigned k) {
  mpz_class total = 0, term;
  for (auto x : xs)
    for (auto y : ys) {
      mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(std::abs(x - y)), k);
      total += term;
    }
  return total;
}

Rational normalize(const mpz_class& sum, int n, unsigned k) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(n), k + 2);
  Rational r(sum, den);
  r.canonicalize();
  return r;
}

std::vector<BoundCheck> moment_bounds(unsigned k, const Rational& best) {
  std::vector<BoundCheck> out;
  auto add = [&](std::string name, Rational value, bool proven) {
    const bool ok = best <= value;
    out.push_back({std::move(name), std::move(value), proven, ok});
  };
  if (k <= 2) {
    add("power_bound", power_bound_exact(k), true);
  } else {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
    add("power_hypothesis", Rational(mpz_class(1), den), false);
    add("new_bound", new_bound(k), true);
  }
  add("eps_layer_cake", eps_moment_bound(k), true);
  return out;
}

std::vector<BoundCheck> tail_bounds(const Rational& delta, bool strict, const Rational& best) {
  std::vector<BoundCheck> out;
  auto add = [&](std::string name, Rational value, bool proven) {
    const bool ok = best <= value;
    out.push_back({std::move(name), std::move(value), proven, ok});
  };
  // The independent-pair curve is a theorem for ">" over diagrams; for ">=" it is the open conjecture.
  add("independent_tail", independent_tail_curve(delta), strict);
  add("burdzy_pal_tail", burdzy_pal_tail(delta), true);
  add("eps_envelope", eps_envelope().eval_exact(delta), true);
  return out;
}

void enforce_proven_bounds(const SearchReport& r) {
  for (const auto& b : r.bounds)
    if (b.proven && !b.satisfied)
      throw InvariantError("search value " + to_string(r.best) + " exceeds proven bound " + b.name +
                           " = " + to_string(b.value));
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct PartitionBest {
  mpz_class sum = -1;
  std::vector<int> parts;
  long long examined = 0;

  void offer(const mpz_class& s, const std::vector<int>& p) {
    if (s > sum || (s == sum && lex_less(p, parts))) {
      sum = s;
      parts = p;
    }
  }
  void merge(const PartitionBest& other) {
    examined += other.examined;
    if (other.sum >= 0) offer(other.sum, other.parts);
  }
};

}  // namespace

BoxPartitionCursor::BoxPartitionCursor(int n) : n_(n), parts_(static_cast<std::size_t>(n), 0) {
  if (n < 1) throw ValidationError("box size must be positive");
}

bool BoxPartitionCursor::next() {
  for (int i = n_ - 1; i >= 0; --i) {
    const int cap = i == 0 ? n_ : parts_[static_cast<std::size_t>(i - 1)];
    if (parts_[static_cast<std::size_t>(i)] < cap) {
      ++parts_[static_cast<std::size_t>(i)];
      std::fill(parts_.begin() + i + 1, parts_.end(), 0);
      return true;
    }
  }
  return false;
}

std::vector<Partition> enumerate_box_partitions(int n) {
  std::vector<Partition> out;
  BoxPartitionCursor cur(n);
  do out.push_back(cur.current());
  while (cur.next());
  return out;
}

mpz_class partition_power_sum(const Partition& b, unsigned k) {
  const Partition sorted = b.sorted();
  const Partition bstar = conjugate(sorted);
  std::vector<std::int32_t> xs(bstar.parts().begin(), bstar.parts().end());
  std::vector<std::int32_t> ys(sorted.parts().begin(), sorted.parts().end());
  PowerTable pt(b.n(), k);
  if (pt.fits) return mpz_class(static_cast<long>(kernels::abs_diff_table_sum(xs, ys, pt.table)));
  return power_sum_exact(xs, ys, k);
}

Rational partition_score(const Partition& b, unsigned k) {
  return normalize(partition_power_sum(b, k), b.n(), k);
}

std::string_view method_name(SearchMethod m) {
  switch (m) {
    case SearchMethod::exhaustive: return "exhaustive";
    case SearchMethod::local: return "local";
    case SearchMethod::analytic_family: return "analytic-family";
  }
  return "unknown";
}

SearchReport exhaustive_best(int n, unsigned k, SearchOptions opts) {
  if (n < 1) throw ValidationError("box size must be positive");
  if (n > kMaxExhaustivePartitionBox)
    throw ValidationError("exhaustive search is limited to n <= " +
                          std::to_string(kMaxExhaustivePartitionBox) + "; use local search");
  const PowerTable pt(n, k);
  const unsigned workers = std::max(1u, opts.workers);

  auto run = [&](unsigned worker) {
    PartitionBest best;
    BoxPartitionCursor cur(n);
    std::vector<std::int32_t> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
    long long index = 0;
    do {
      if (index++ % workers != worker) continue;
      const auto& parts = cur.parts();
      conjugate_sorted(parts, xs);
      std::copy(parts.begin(), parts.end(), ys.begin());
      mpz_class s = pt.fits ? mpz_class(static_cast<long>(kernels::abs_diff_table_sum(xs, ys, pt.table)))
                            : power_sum_exact(xs, ys, k);
      ++best.examined;
      if (s > best.sum) best.offer(s, parts);  // enumeration is lexicographic, so first wins ties
    } while (cur.next());
    return best;
  };

  PartitionBest best;
  if (workers == 1) {
    best = run(0);
  } else {
    std::vector<PartitionBest> partial(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&, w] { partial[w] = run(w); });
    }
    for (const auto& p : partial) best.merge(p);
  }

  SearchReport r;
  r.objective = "moment";
  r.k = k;
  r.n = n;
  r.best = normalize(best.sum, n, k);
  r.witness = Partition(n, best.parts);
  r.examined = best.examined;
  r.method = SearchMethod::exhaustive;
  r.bounds = moment_bounds(k, r.best);
  enforce_proven_bounds(r);
  return r;
}

SearchReport exhaustive_graphs(int n, unsigned k, SearchOptions opts) {
  if (n < 1) throw ValidationError("part size must be positive");
  if (n > kMaxExhaustiveGraphSize)
    throw ValidationError("graph enumeration is limited to n <= " +
                          std::to_string(kMaxExhaustiveGraphSize));
  const PowerTable pt(n, k);
  const std::uint64_t count = std::uint64_t{1} << (n * n);
  const unsigned workers = std::max(1u, opts.workers);

  struct Best {
    mpz_class sum = -1;
    std::uint64_t bits = 0;
  };
  auto run = [&](std::uint64_t lo, std::uint64_t hi) {
    Best best;
    std::vector<std::int32_t> dx(static_cast<std::size_t>(n)), dy(static_cast<std::size_t>(n));
    for (std::uint64_t bits = lo; bits < hi; ++bits) {
      std::fill(dx.begin(), dx.end(), 0);
      std::fill(dy.begin(), dy.end(), 0);
      for (int c = 0; c < n * n; ++c)
        if ((bits >> c) & 1U) {
          ++dx[static_cast<std::size_t>(c / n)];
          ++dy[static_cast<std::size_t>(c % n)];
        }
      mpz_class s = pt.fits ? mpz_class(static_cast<long>(kernels::abs_diff_table_sum(dx, dy, pt.table)))
                            : power_sum_exact(dx, dy, k);
      if (s > best.sum) best = {s, bits};
    }
    return best;
  };

  std::vector<Best> partial(workers);
  if (workers == 1) {
    partial[0] = run(0, count);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = count * w / workers, hi = count * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] { partial[w] = run(lo, hi); });
    }
  }
  // Ranges are ascending, so keeping the first strict maximum keeps the smallest index.
  Best best;
  for (const auto& p : partial)
    if (p.sum > best.sum) best = p;

  SearchReport r;
  r.objective = "moment";
  r.k = k;
  r.n = n;
  r.best = normalize(best.sum, n, k);
  r.witness = BipartiteGraph::from_bits(n, best.bits);
  r.examined = static_cast<long long>(count);
  r.method = SearchMethod::exhaustive;
  r.bounds = moment_bounds(k, r.best);
  enforce_proven_bounds(r);
  return r;
}

SearchReport local_search(int n, unsigned k, LocalSearchOptions opts) {
  if (n < 1) throw ValidationError("box size must be positive");
  if (opts.max_iters < 0) throw ValidationError("max_iters must be non-negative");
  const PowerTable pt(n, k);
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> part_dist(0, n);
  std::vector<std::int32_t> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));

  long long examined = 0;
  auto score = [&](const std::vector<int>& parts) {
    ++examined;
    conjugate_sorted(parts, xs);
    std::copy(parts.begin(), parts.end(), ys.begin());
    return pt.fits ? mpz_class(static_cast<long>(kernels::abs_diff_table_sum(xs, ys, pt.table)))
                   : power_sum_exact(xs, ys, k);
  };

  mpz_class best_sum = -1;
  std::vector<int> best_parts;
  long long iters = 0;
  const unsigned restarts = std::max(1u, opts.restarts);
  for (unsigned r = 0; r < restarts; ++r) {
    std::vector<int> cur(static_cast<std::size_t>(n));
    for (auto& p : cur) p = part_dist(rng);
    std::sort(cur.begin(), cur.end(), std::greater<>());
    mpz_class cur_sum = score(cur);
    if (cur_sum > best_sum) {
      best_sum = cur_sum;
      best_parts = cur;
    }

    while (iters < opts.max_iters) {
      mpz_class move_sum = cur_sum;
      int move_index = -1, move_delta = 0;
      for (int i = 0; i < n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        for (int delta : {+1, -1}) {
          const int v = cur[ui] + delta;
          const int hi = i == 0 ? n : cur[ui - 1];
          const int lo = i + 1 == n ? 0 : cur[ui + 1];
          if (v < lo || v > hi) continue;
          cur[ui] = v;
          mpz_class s = score(cur);
          cur[ui] -= delta;
          if (s > move_sum) {
            move_sum = s;
            move_index = i;
            move_delta = delta;
          }
        }
      }
      if (move_index < 0) break;
      cur[static_cast<std::size_t>(move_index)] += move_delta;
      cur_sum = move_sum;
      ++iters;
      if (cur_sum > best_sum) {
        best_sum = cur_sum;
        best_parts = cur;
      }
    }
    if (iters >= opts.max_iters) break;
  }

  SearchReport rep;
  rep.objective = "moment";
  rep.k = k;
  rep.n = n;
  rep.best = normalize(best_sum, n, k);
  rep.witness = Partition(n, best_parts);
  rep.examined = examined;
  rep.method = SearchMethod::local;
  rep.bounds = moment_bounds(k, rep.best);
  enforce_proven_bounds(rep);
  return rep;
}

FamilyPoint two_level_family(unsigned k, int grid) {
  if (k < 2) throw ValidationError("two-level family needs k >= 2");
  if (grid < 2) throw ValidationError("grid must have at least one interior point");
  FamilyPoint best{Rational(0), Rational(-1)};
  for (int i = 1; i < grid; ++i) {
    const Rational a = make_rational(i, grid);
    const Rational b = 1 - a;
    Rational g = a * pow(b, k) + b * pow(a, k);
    if (g > best.value) best = {a, std::move(g)};
  }
  return best;
}

SearchReport counterexample_hunt(unsigned k, int n_max, SearchOptions opts) {
  if (k < 4) throw ValidationError("counterexample hunting needs k >= 4; (2,3] is open");
  if (n_max < 1) throw ValidationError("n_max must be positive");

  std::vector<SearchReport> stages;
  {
    constexpr int grid = 1000;
    const auto fam = two_level_family(k, grid);
    SearchReport r;
    r.objective = "moment";
    r.k = k;
    r.n = grid;
    r.best = fam.value;
    r.witness = indicator_diagram(fam.a);
    r.examined = grid - 1;
    r.method = SearchMethod::analytic_family;
    r.bounds = moment_bounds(k, r.best);
    stages.push_back(std::move(r));
  }
  for (int n = 1; n <= std::min(n_max, 8); ++n) stages.push_back(exhaustive_best(n, k, opts));
  for (int n = 9; n <= n_max; ++n) stages.push_back(local_search(n, k, {}));

  const SearchReport* best = &stages.front();
  for (const auto& s : stages)
    if (s.best > best->best) best = &s;

  SearchReport r = *best;
  r.examined = 0;
  for (const auto& s : stages) r.examined += s.examined;
  r.bounds = moment_bounds(k, r.best);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
  r.exceeds_power_bound = r.best > Rational(mpz_class(1), den);
  r.stages = std::move(stages);
  enforce_proven_bounds(r);
  return r;
}

Rational tail_family_gap(const Rational& delta, int resolution) {
  if (resolution < 1) throw ValidationError("resolution must be positive");
  const Rational step = delta + make_rational(1, resolution);
  const Rational mid = (1 + delta) / 2;
  return std::min(step, mid);
}

SearchReport tail_search(const Rational& delta, int resolution, bool strict) {
  if (delta <= make_rational(1, 2) || delta > 1)
    throw ValidationError("delta = " + to_string(delta) + " outside (1/2, 1]");
  if (resolution < 1 || resolution > kMaxTailResolution)
    throw ValidationError("resolution must lie in [1, " + std::to_string(kMaxTailResolution) + "]");
  const int m = resolution;

  // |b*_i - b_j| / m > p/q  <=>  q |b*_i - b_j| > p m
  const mpz_class p = delta.get_num(), q = delta.get_den();
  const mpz_class threshold = p * m;
  const bool fast = q.fits_slong_p() && threshold.fits_slong_p();

  SearchReport exhaustive;
  exhaustive.objective = "tail";
  exhaustive.delta = delta;
  exhaustive.strict = strict;
  exhaustive.n = m;
  exhaustive.method = SearchMethod::exhaustive;
  {
    long long best_count = -1;
    std::vector<int> best_parts;
    BoxPartitionCursor cur(m);
    std::vector<std::int32_t> xs(static_cast<std::size_t>(m)), ys(static_cast<std::size_t>(m));
    do {
      const auto& parts = cur.parts();
      long long count;
      if (fast) {
        conjugate_sorted(parts, xs);
        std::copy(parts.begin(), parts.end(), ys.begin());
        count = kernels::count_abs_diff_exceeding(xs, ys, q.get_si(), threshold.get_si(), strict);
      } else {
        const Rational t = tail(from_partition(cur.current()), delta, strict);
        count = Rational(t * m * m).get_num().get_si();
      }
      ++exhaustive.examined;
      if (count > best_count) {
        best_count = count;
        best_parts = parts;
      }
    } while (cur.next());
    exhaustive.best = make_rational(best_count, static_cast<long long>(m) * m);
    exhaustive.witness = Partition(m, best_parts);
    exhaustive.bounds = tail_bounds(delta, strict, exhaustive.best);
  }

  std::vector<SearchReport> stages{exhaustive};
  if (delta < 1) {
    const Rational d = tail_family_gap(delta, m);
    StepFn f = two_level_diagram(d);
    SearchReport fam;
    fam.objective = "tail";
    fam.delta = delta;
    fam.strict = strict;
    fam.n = m;
    fam.best = tail(f, delta, strict);
    fam.witness = std::move(f);
    fam.examined = 1;
    fam.method = SearchMethod::analytic_family;
    fam.bounds = tail_bounds(delta, strict, fam.best);
    fam.gap = 2 * delta * (1 - delta) - fam.best;
    stages.push_back(std::move(fam));
  }

  const SearchReport* best = &stages.front();
  for (const auto& s : stages)
    if (s.best > best->best) best = &s;
  SearchReport r = *best;
  r.examined = 0;
  for (const auto& s : stages) r.examined += s.examined;
  r.gap = 2 * delta * (1 - delta) - r.best;
  r.stages = std::move(stages);
  enforce_proven_bounds(r);
  return r;
}

Rational reevaluate_witness(const SearchReport& report) {
  const bool is_tail = report.objective == "tail";
  if (is_tail && !report.delta) throw ValidationError("tail report without delta");
  if (!is_tail && !report.k) throw ValidationError("moment report without k");
  return std::visit(
      [&](const auto& w) -> Rational {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, BipartiteGraph>) {
          if (is_tail) throw ValidationError("graph witnesses carry moment objectives only");
          return objective(w, *report.k);
        } else {
          StepFn f = [&] {
            if constexpr (std::is_same_v<W, Partition>) return from_partition(w);
            else return w;
          }();
          return is_tail ? tail(f, *report.delta, report.strict) : moment(f, *report.k);
        }
      },
      report.witness);
}

}  // namespace coherent
