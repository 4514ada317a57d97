#include <doctest.h>

#include <random>

#include "coherent/diagrams.hpp"
#include "coherent/search.hpp"
#include "oracles.hpp"

using namespace coherent;

namespace {

Rational q(long long p, long long d = 1) { return make_rational(p, d); }

StepFn half() { return StepFn({{q(1, 2), q(1)}, {q(1, 2), q(0)}}); }

std::vector<Rational> delta_grid() {
  std::vector<Rational> out;
  for (int i = 11; i <= 19; ++i) out.push_back(q(i, 20));
  return out;
}

StepFn random_stepfn(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pieces_d(1, 5), num(1, 12);
  const int m = pieces_d(rng);
  std::vector<int> w(static_cast<std::size_t>(m)), h(static_cast<std::size_t>(m));
  int total = 0;
  for (auto& x : w) total += (x = num(rng));
  std::uniform_int_distribution<int> hd(0, 12);
  for (auto& x : h) x = hd(rng);
  std::sort(h.begin(), h.end(), std::greater<>());
  std::vector<StepPiece> pieces;
  for (int i = 0; i < m; ++i) pieces.push_back({q(w[i], total), q(h[i], 12)});
  return StepFn(std::move(pieces));
}

}  // namespace

TEST_CASE("step function validation and normalization") {
  CHECK_THROWS_AS(StepFn({}), ValidationError);
  CHECK_THROWS_AS(StepFn({{q(1, 2), q(1)}}), ValidationError);                   // widths sum to 1/2
  CHECK_THROWS_AS(StepFn({{q(1, 2), q(0)}, {q(1, 2), q(1)}}), ValidationError);  // increasing
  CHECK_THROWS_AS(StepFn({{q(1), q(3, 2)}}), ValidationError);
  CHECK_THROWS_AS(StepFn({{q(0), q(1)}, {q(1), q(0)}}), ValidationError);
  const StepFn merged({{q(1, 4), q(1, 2)}, {q(1, 4), q(1, 2)}, {q(1, 2), q(0)}});
  REQUIRE(merged.pieces().size() == 2);
  CHECK(merged.pieces()[0].width == q(1, 2));
}

TEST_CASE("x_eval and y_eval") {
  CHECK(x_eval(half(), q(1, 4)) == 1);
  CHECK(x_eval(half(), q(3, 4)) == 0);
  CHECK(x_eval(half(), q(1, 2)) == 0);  // left-closed pieces
  CHECK(x_eval(half(), q(1)) == 0);
  CHECK(x_eval(StepFn({{q(1), q(1, 2)}}), q(1, 3)) == q(1, 2));
  CHECK_THROWS_AS(x_eval(half(), q(-1, 4)), ValidationError);

  CHECK(y_eval(half(), q(1, 4)) == q(1, 2));
  CHECK(y_eval(StepFn({{q(1), q(1, 2)}}), q(1, 4)) == 1);
  CHECK(y_eval(StepFn({{q(1), q(1, 2)}}), q(3, 4)) == 0);
  CHECK(y_eval(StepFn({{q(1), q(1, 2)}}), q(1, 2)) == 0);  // strict height > v
  CHECK(y_eval(StepFn({{q(1, 5), q(1)}, {q(4, 5), q(0)}}), q(1, 2)) == q(1, 5));
  CHECK_THROWS_AS(y_eval(half(), q(5, 4)), ValidationError);
}

TEST_CASE("marginals") {
  auto m = marginals(half());
  CHECK(m.x.atoms == std::vector<Atom>{{q(1), q(1, 2)}, {q(0), q(1, 2)}});
  CHECK(m.y.atoms == std::vector<Atom>{{q(1, 2), q(1)}});

  m = marginals(StepFn({{q(1), q(1, 2)}}));
  CHECK(m.x.atoms == std::vector<Atom>{{q(1, 2), q(1)}});
  CHECK(m.y.atoms == std::vector<Atom>{{q(1), q(1, 2)}, {q(0), q(1, 2)}});

  m = marginals(StepFn({{q(1, 5), q(1)}, {q(4, 5), q(0)}}));
  CHECK(m.x.atoms == std::vector<Atom>{{q(1), q(1, 5)}, {q(0), q(4, 5)}});
  CHECK(m.y.atoms == std::vector<Atom>{{q(1, 5), q(1)}});

  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto f = random_stepfn(rng);
    const auto mm = marginals(f);
    CHECK(mm.x.total_mass() == 1);
    CHECK(mm.y.total_mass() == 1);
    CHECK(mm.x.mean() == mm.y.mean());  // both equal P(A), the area of the region
  }
}

TEST_CASE("moment examples") {
  for (unsigned k = 1; k <= 8; ++k) CHECK(moment(half(), k) == q(1, 1LL << k));
  for (unsigned k = 1; k <= 5; ++k) CHECK(moment(StepFn({{q(1), q(0)}}), k) == 0);
  const auto fifth = StepFn({{q(1, 5), q(1)}, {q(4, 5), q(0)}});
  CHECK(moment(fifth, 4) == q(52, 625));
  CHECK(moment(fifth, 4) > q(1, 16));
  CHECK(moment(half(), 0) == 1);
}

TEST_CASE("tail examples") {
  CHECK(tail(half(), q(1, 2), true) == 0);
  CHECK(tail(half(), q(1, 2), false) == 1);
  CHECK(tail(StepFn({{q(2, 5), q(1)}, {q(3, 5), q(2, 5)}}), q(1, 2), true) == q(12, 25));
  for (auto d : {q(0), q(1, 3), q(99, 100)}) {
    CHECK(tail(StepFn({{q(1), q(1)}}), d, true) == 0);
    CHECK(tail(StepFn({{q(1), q(1)}}), d, false) == 0 + (d == 0 ? 1 : 0));
  }
}

TEST_CASE("from_partition") {
  const auto f = from_partition(Partition(5, {5, 4, 3, 3, 2}));
  CHECK(f.pieces() == std::vector<StepPiece>{{q(1, 5), q(1)}, {q(1, 5), q(4, 5)}, {q(2, 5), q(3, 5)},
                                             {q(1, 5), q(2, 5)}});
  CHECK(from_partition(Partition(3, {0, 0, 0})).pieces() == std::vector<StepPiece>{{q(1), q(0)}});
  CHECK(from_partition(Partition(2, {2, 0})) == half());
  CHECK(from_partition(Partition(2, {0, 2})) == half());
}

TEST_CASE("verify_coherence holds for every valid diagram") {
  CHECK(verify_coherence(half()));
  CHECK(verify_coherence(StepFn({{q(1, 3), q(1)}, {q(1, 3), q(1, 2)}, {q(1, 3), q(0)}})));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) CHECK(verify_coherence(random_stepfn(rng)));
}

TEST_CASE("moment of a partition diagram matches the conjugate formula") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& seq : oracle::all_sequences(n))
      for (unsigned k : {1u, 2u, 3u, 5u})
        CHECK(moment(from_partition(Partition(n, seq)), k) == oracle::partition_moment(seq, k));
}

TEST_CASE("moment agrees with Monte Carlo within 3 standard errors") {
  const std::vector<std::pair<std::vector<std::pair<double, double>>, StepFn>> spots{
      {{{0.5, 1.0}, {0.5, 0.0}}, half()},
      {{{0.2, 1.0}, {0.8, 0.0}}, StepFn({{q(1, 5), q(1)}, {q(4, 5), q(0)}})},
      {{{0.25, 0.75}, {0.5, 0.5}, {0.25, 0.125}},
       StepFn({{q(1, 4), q(3, 4)}, {q(1, 2), q(1, 2)}, {q(1, 4), q(1, 8)}})},
  };
  std::uint64_t seed = 100;
  for (const auto& [doubles, f] : spots) {
    for (unsigned k : {2u, 4u}) {
      const auto est = oracle::monte_carlo_moment(doubles, k, 1'000'000, seed++);
      const double exact = to_double(moment(f, k));
      CHECK(std::abs(est.mean - exact) <= 3 * est.stderr_ + 1e-12);
    }
  }
}

TEST_CASE("dichotomy of x_f and y_f on random points") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pt(0, 60);
  for (int t = 0; t < 1000; ++t) {
    const auto f = random_stepfn(rng);
    const Rational s = q(pt(rng), 60), u = q(pt(rng), 60);
    const Rational xs = x_eval(f, s), yt = y_eval(f, u);
    CHECK(((xs <= u && yt <= s) || (xs >= u && yt >= s)));
  }
}

TEST_CASE("tail never exceeds 2d(1-d) on enumerated diagrams, and is monotone in delta") {
  const auto grid = delta_grid();
  for (int m = 1; m <= 6; ++m) {
    for (const auto& b : enumerate_box_partitions(m)) {
      const auto f = from_partition(b);
      Rational prev_strict = 2, prev_weak = 2;
      for (const auto& d : grid) {
        const Rational ts = tail(f, d, true), tw = tail(f, d, false);
        CHECK(ts <= 2 * d * (1 - d));
        CHECK(ts <= tw);
        CHECK(ts <= prev_strict);
        CHECK(tw <= prev_weak);
        prev_strict = ts;
        prev_weak = tw;
      }
    }
  }
}

TEST_CASE("two-level diagrams") {
  const auto f = two_level_diagram(q(3, 5));
  CHECK(f == StepFn({{q(2, 5), q(1)}, {q(3, 5), q(2, 5)}}));
  CHECK(tail(f, q(1, 2), true) == q(12, 25));
  CHECK(tail(two_level_diagram(q(13, 20)), q(3, 5), true) == q(91, 200));
  CHECK_THROWS_AS(two_level_diagram(q(1)), ValidationError);
  CHECK(indicator_diagram(q(1, 2)) == half());
}
