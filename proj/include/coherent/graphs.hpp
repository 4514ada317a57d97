#pragma once

#include <cstdint>
#include <vector>

#include "coherent/rational.hpp"

namespace coherent {

// Bipartite graph on x_1..x_n and y_1..y_n given by its n x n biadjacency
// matrix: adj(i, j) = 1 iff (x_i, y_j) is an edge.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  /// Empty graph.
  explicit BipartiteGraph(int n);
  /// Throws ValidationError unless rows form an n x n 0-1 matrix with n >= 1.
  static BipartiteGraph from_rows(const std::vector<std::vector<int>>& rows);
  /// Bit (i*n + j) of `bits` is adj(i, j).  Requires n*n <= 64.
  static BipartiteGraph from_bits(int n, std::uint64_t bits);

  int n() const { return n_; }
  bool edge(int i, int j) const { return adj_[static_cast<std::size_t>(i * n_ + j)] != 0; }
  void set_edge(int i, int j, bool present);
  long long edge_count() const;
  std::vector<std::vector<int>> to_rows() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

struct DegreeSequences {
  std::vector<int> x;  // row sums
  std::vector<int> y;  // column sums
};

DegreeSequences degrees(const BipartiteGraph& g);

/// (1 / n^(2+k)) Σ_ij |deg(x_i) - deg(y_j)|^k.
Rational objective(const BipartiteGraph& g, unsigned k);

/// Same value computed from the degree sequences alone (the objective only
/// depends on them).
Rational degree_objective(const std::vector<int>& x_degrees, const std::vector<int>& y_degrees,
                          int n, unsigned k);

/// First Zagreb index: Σ deg(v)^2 over both parts.
long long zagreb_m1(const BipartiteGraph& g);

/// ½ Σ over ordered pairs (u, v) of V(G) of |deg u - deg v|^k, both parts pooled.
Rational total_irregularity(const BipartiteGraph& g, unsigned k);

/// e = qn + r: q y-vertices joined to every x-vertex, one more joined to x_1..x_r.
BipartiteGraph extremal_b1(int n, long long e);

/// (n - r) q^2 + r (q + 1)^2 + q n^2 + r^2 with e = qn + r.
long long m1_upper(int n, long long e);

}  // namespace coherent
