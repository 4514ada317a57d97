#pragma once

#include <cstddef>
#include <vector>

#include "coherent/rational.hpp"

namespace coherent {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws ValidationError on ragged input.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Rational row_sum(std::size_t i) const;
  Rational col_sum(std::size_t j) const;
  Rational total() const;

  std::vector<std::vector<Rational>> to_rows() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Discrete coherent pair: a_ij = P(A, X = x_i, Y = y_j), b_ij = P(X = x_i, Y = y_j).
// Invariants: same shape, 0 <= a_ij <= b_ij, Σ b_ij = 1.  Shapes may be
// rectangular after slicing; missing rows or columns count as zero.
class CoherentMatrixPair {
 public:
  /// Throws ValidationError when an invariant fails.
  CoherentMatrixPair(RationalMatrix a, RationalMatrix b);

  const RationalMatrix& a() const { return a_; }
  const RationalMatrix& b() const { return b_; }
  std::size_t rows() const { return a_.rows(); }
  std::size_t cols() const { return a_.cols(); }

  friend bool operator==(const CoherentMatrixPair&, const CoherentMatrixPair&) = default;

 private:
  RationalMatrix a_;
  RationalMatrix b_;
};

struct ProductWeights {
  std::vector<Rational> row;  // R
  std::vector<Rational> col;  // C
};

/// Σ over b_ij != 0 of b_ij |rowratio_i - colratio_j|^k (E|X - Y|^k of the pair).
Rational phi(const CoherentMatrixPair& pair, unsigned k);

/// Replaces row i by l copies of itself scaled by 1/l (in both matrices).
/// l = 0 deletes the row, which is allowed only for an all-zero row.
CoherentMatrixPair slice_row(const CoherentMatrixPair& pair, std::size_t i, unsigned l);
CoherentMatrixPair slice_col(const CoherentMatrixPair& pair, std::size_t j, unsigned l);

/// Σ_ij |rowsum_i - colsum_j|^k.  Entries must lie in [0,1].
Rational xi(const RationalMatrix& a, unsigned k);

/// B = R C^T.  Throws ValidationError unless R, C are probability vectors.
RationalMatrix outer_product(const ProductWeights& w);

/// phi((A, R C^T), k).  Throws ValidationError unless 0 <= a_ij <= r_i c_j.
Rational from_independent(const RationalMatrix& a, const ProductWeights& w, unsigned k);

/// xi(A, k) / n^(2+k) for a square 0-1 matrix A.
Rational uniformize(const RationalMatrix& a, unsigned k);

}  // namespace coherent
