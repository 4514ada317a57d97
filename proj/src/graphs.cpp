#include "coherent/graphs.hpp"

#include <cstdlib>
#include <string>

namespace coherent {

namespace {

void check_edges(int n, long long e) {
  if (n < 1) throw ValidationError("part size must be positive");
  const long long cap = static_cast<long long>(n) * n;
  if (e < 0 || e > cap)
    throw ValidationError("edge count " + std::to_string(e) + " outside [0, " + std::to_string(cap) + "]");
}

}  // namespace

BipartiteGraph::BipartiteGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 1) throw ValidationError("part size must be positive");
}

BipartiteGraph BipartiteGraph::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  BipartiteGraph g(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw ValidationError("adjacency row " + std::to_string(i) + " has the wrong length");
    for (int j = 0; j < n; ++j) {
      const int v = rows[i][j];
      if (v != 0 && v != 1) throw ValidationError("adjacency entries must be 0 or 1");
      g.set_edge(i, j, v == 1);
    }
  }
  return g;
}

BipartiteGraph BipartiteGraph::from_bits(int n, std::uint64_t bits) {
  if (n < 1 || n * n > 64) throw ValidationError("from_bits supports 1 <= n <= 8");
  BipartiteGraph g(n);
  for (int c = 0; c < n * n; ++c) g.adj_[static_cast<std::size_t>(c)] = (bits >> c) & 1U;
  return g;
}

void BipartiteGraph::set_edge(int i, int j, bool present) {
  adj_[static_cast<std::size_t>(i * n_ + j)] = present ? 1 : 0;
}

long long BipartiteGraph::edge_count() const {
  long long e = 0;
  for (auto v : adj_) e += v;
  return e;
}

std::vector<std::vector<int>> BipartiteGraph::to_rows() const {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) rows[i][j] = edge(i, j) ? 1 : 0;
  return rows;
}

DegreeSequences degrees(const BipartiteGraph& g) {
  const int n = g.n();
  DegreeSequences d{std::vector<int>(static_cast<std::size_t>(n), 0),
                    std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.edge(i, j)) {
        ++d.x[i];
        ++d.y[j];
      }
  return d;
}

Rational degree_objective(const std::vector<int>& x_degrees, const std::vector<int>& y_degrees,
                          int n, unsigned k) {
  Rational total = 0;
  for (int dx : x_degrees)
    for (int dy : y_degrees) total += pow(Rational(std::abs(dx - dy)), k);
  return total / pow(Rational(n), 2 + k);
}

Rational objective(const BipartiteGraph& g, unsigned k) {
  const auto d = degrees(g);
  return degree_objective(d.x, d.y, g.n(), k);
}

long long zagreb_m1(const BipartiteGraph& g) {
  const auto d = degrees(g);
  long long m1 = 0;
  for (int v : d.x) m1 += static_cast<long long>(v) * v;
  for (int v : d.y) m1 += static_cast<long long>(v) * v;
  return m1;
}

Rational total_irregularity(const BipartiteGraph& g, unsigned k) {
  const auto d = degrees(g);
  std::vector<int> all(d.x);
  all.insert(all.end(), d.y.begin(), d.y.end());
  Rational ordered = 0;
  for (int u : all)
    for (int v : all) ordered += pow(Rational(std::abs(u - v)), k);
  return ordered / 2;
}

BipartiteGraph extremal_b1(int n, long long e) {
  check_edges(n, e);
  const long long q = e / n;
  const long long r = e % n;
  BipartiteGraph g(n);
  for (int j = 0; j < q; ++j)
    for (int i = 0; i < n; ++i) g.set_edge(i, j, true);
  if (r > 0)
    for (int i = 0; i < r; ++i) g.set_edge(i, static_cast<int>(q), true);
  return g;
}

long long m1_upper(int n, long long e) {
  check_edges(n, e);
  const long long q = e / n;
  const long long r = e % n;
  const long long nn = n;
  return (nn - r) * q * q + r * (q + 1) * (q + 1) + q * nn * nn + r * r;
}

}  // namespace coherent
