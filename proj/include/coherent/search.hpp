#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coherent/diagrams.hpp"
#include "coherent/graphs.hpp"
#include "coherent/partitions.hpp"
#include "coherent/rational.hpp"

namespace coherent {

// Walks every weakly decreasing sequence in {0..n}^n, from (0,...,0) up to
// (n,...,n) in lexicographic order; there are C(2n, n) of them.
class BoxPartitionCursor {
 public:
  explicit BoxPartitionCursor(int n);

  const std::vector<int>& parts() const { return parts_; }
  Partition current() const { return Partition(n_, parts_); }
  /// Advances; returns false once the last partition has been visited.
  bool next();

 private:
  int n_;
  std::vector<int> parts_;
};

std::vector<Partition> enumerate_box_partitions(int n);

/// Σ_ij |b*_i - b_j|^k, exactly.
mpz_class partition_power_sum(const Partition& b, unsigned k);

/// partition_power_sum / n^(2+k), which equals moment(from_partition(b), k).
Rational partition_score(const Partition& b, unsigned k);

enum class SearchMethod { exhaustive, local, analytic_family };
std::string_view method_name(SearchMethod m);

struct BoundCheck {
  std::string name;
  Rational value;
  bool proven;     // a theorem, as opposed to a hypothesis being tested
  bool satisfied;  // best <= value
};

using Witness = std::variant<Partition, StepFn, BipartiteGraph>;

struct SearchReport {
  std::string objective;  // "moment" or "tail"
  std::optional<unsigned> k;
  std::optional<Rational> delta;
  bool strict = true;  // tail reports: ">" rather than ">="
  int n = 0;  // box size or resolution
  Rational best;
  Witness witness;
  long long examined = 0;
  SearchMethod method = SearchMethod::exhaustive;
  std::vector<BoundCheck> bounds;
  std::optional<bool> exceeds_power_bound;  // counterexample flag
  std::optional<Rational> gap;              // bound minus best, tail searches
  std::vector<SearchReport> stages;         // sub-runs of composite searches
};

struct SearchOptions {
  unsigned workers = 1;
};

constexpr int kMaxExhaustivePartitionBox = 14;
constexpr int kMaxExhaustiveGraphSize = 4;
constexpr int kMaxTailResolution = 12;

/// Maximizes partition_score over every box partition.
SearchReport exhaustive_best(int n, unsigned k, SearchOptions opts = {});

/// Maximizes objective(G, k) over all 2^(n^2) biadjacency matrices.
SearchReport exhaustive_graphs(int n, unsigned k, SearchOptions opts = {});

struct LocalSearchOptions {
  std::uint64_t seed = 0;
  long long max_iters = 10000;  // accepted moves, summed over restarts
  unsigned restarts = 32;
};

/// Steepest-ascent hill climbing over box partitions with single-cell
/// add/remove moves and random restarts.  A lower bound on the supremum.
SearchReport local_search(int n, unsigned k, LocalSearchOptions opts = {});

struct FamilyPoint {
  Rational a;
  Rational value;
};

/// Best a in {1/m, ..., (m-1)/m} for g(a) = a(1-a)^k + (1-a)a^k, which is
/// E|X - Y|^k for X = 1_A, Y = P(A) = a.  Ties go to the smallest a.
FamilyPoint two_level_family(unsigned k, int grid = 1000);

/// Looks for E|X - Y|^k > 2^-k among independent coherent pairs (k >= 4).
SearchReport counterexample_hunt(unsigned k, int n_max = 12, SearchOptions opts = {});

/// Maximizes P(|X_f - Y_f| > delta) over the diagrams of all m x m box
/// partitions and a two-level diagram just past delta.
SearchReport tail_search(const Rational& delta, int resolution, bool strict = true);

/// Recomputes the objective of the report's witness with the diagram or
/// graph evaluators (not the search kernels).
Rational reevaluate_witness(const SearchReport& report);

/// Gap d used for the two-level member of tail_search: min(delta + 1/m, (1 + delta)/2).
Rational tail_family_gap(const Rational& delta, int resolution);

}  // namespace coherent
