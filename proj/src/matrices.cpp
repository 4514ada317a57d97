#include "coherent/matrices.hpp"

#include <string>

namespace coherent {

namespace {

std::string cell(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_probability_vector(const std::vector<Rational>& v, const char* name) {
  Rational total = 0;
  for (const auto& x : v) {
    if (x < 0) throw ValidationError(std::string(name) + " has a negative entry");
    total += x;
  }
  if (total != 1) throw ValidationError(std::string(name) + " sums to " + to_string(total));
}

}  // namespace

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ValidationError("ragged matrix at row " + std::to_string(i));
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Rational RationalMatrix::row_sum(std::size_t i) const {
  Rational s = 0;
  for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j);
  return s;
}

Rational RationalMatrix::col_sum(std::size_t j) const {
  Rational s = 0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, j);
  return s;
}

Rational RationalMatrix::total() const {
  Rational s = 0;
  for (const auto& x : data_) s += x;
  return s;
}

std::vector<std::vector<Rational>> RationalMatrix::to_rows() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

CoherentMatrixPair::CoherentMatrixPair(RationalMatrix a, RationalMatrix b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != b_.rows() || a_.cols() != b_.cols())
    throw ValidationError("A and B must have the same shape");
  for (std::size_t i = 0; i < a_.rows(); ++i) {
    for (std::size_t j = 0; j < a_.cols(); ++j) {
      if (a_(i, j) < 0) throw ValidationError("a" + cell(i, j) + " is negative");
      if (a_(i, j) > b_(i, j)) throw ValidationError("a" + cell(i, j) + " exceeds b" + cell(i, j));
    }
  }
  if (b_.total() != 1) throw ValidationError("entries of B sum to " + to_string(b_.total()));
}

Rational phi(const CoherentMatrixPair& pair, unsigned k) {
  const auto& a = pair.a();
  const auto& b = pair.b();
  std::vector<Rational> row_ratio(pair.rows()), col_ratio(pair.cols());
  for (std::size_t i = 0; i < pair.rows(); ++i)
    if (const Rational bs = b.row_sum(i); bs != 0) row_ratio[i] = a.row_sum(i) / bs;
  for (std::size_t j = 0; j < pair.cols(); ++j)
    if (const Rational bs = b.col_sum(j); bs != 0) col_ratio[j] = a.col_sum(j) / bs;

  Rational total = 0;
  for (std::size_t i = 0; i < pair.rows(); ++i)
    for (std::size_t j = 0; j < pair.cols(); ++j)
      if (b(i, j) != 0) total += b(i, j) * pow(abs(row_ratio[i] - col_ratio[j]), k);
  return total;
}

namespace {

RationalMatrix slice_rows_of(const RationalMatrix& m, std::size_t i, unsigned l) {
  RationalMatrix out(m.rows() + l - 1, m.cols());
  const Rational scale = make_rational(1, l == 0 ? 1 : l);
  std::size_t dst = 0;
  for (std::size_t src = 0; src < m.rows(); ++src) {
    const unsigned copies = src == i ? l : 1;
    for (unsigned c = 0; c < copies; ++c, ++dst)
      for (std::size_t j = 0; j < m.cols(); ++j) out(dst, j) = src == i ? m(src, j) * scale : m(src, j);
  }
  return out;
}

RationalMatrix transpose(const RationalMatrix& m) {
  RationalMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

}  // namespace

CoherentMatrixPair slice_row(const CoherentMatrixPair& pair, std::size_t i, unsigned l) {
  if (i >= pair.rows()) throw ValidationError("row index " + std::to_string(i) + " out of range");
  if (l == 0) {
    if (pair.b().row_sum(i) != 0)
      throw ValidationError("slicing a nonzero row 0 times (removal) is not allowed");
    if (pair.rows() == 1) throw ValidationError("cannot remove the only row");
  }
  return CoherentMatrixPair(slice_rows_of(pair.a(), i, l), slice_rows_of(pair.b(), i, l));
}

CoherentMatrixPair slice_col(const CoherentMatrixPair& pair, std::size_t j, unsigned l) {
  if (j >= pair.cols()) throw ValidationError("column index " + std::to_string(j) + " out of range");
  if (l == 0) {
    if (pair.b().col_sum(j) != 0)
      throw ValidationError("slicing a nonzero column 0 times (removal) is not allowed");
    if (pair.cols() == 1) throw ValidationError("cannot remove the only column");
  }
  return CoherentMatrixPair(transpose(slice_rows_of(transpose(pair.a()), j, l)),
                            transpose(slice_rows_of(transpose(pair.b()), j, l)));
}

Rational xi(const RationalMatrix& a, unsigned k) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) < 0 || a(i, j) > 1) throw ValidationError("entry" + cell(i, j) + " outside [0,1]");
  std::vector<Rational> rs(a.rows()), cs(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) rs[i] = a.row_sum(i);
  for (std::size_t j = 0; j < a.cols(); ++j) cs[j] = a.col_sum(j);
  Rational total = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) total += pow(abs(r - c), k);
  return total;
}

RationalMatrix outer_product(const ProductWeights& w) {
  check_probability_vector(w.row, "R");
  check_probability_vector(w.col, "C");
  RationalMatrix b(w.row.size(), w.col.size());
  for (std::size_t i = 0; i < w.row.size(); ++i)
    for (std::size_t j = 0; j < w.col.size(); ++j) b(i, j) = w.row[i] * w.col[j];
  return b;
}

Rational from_independent(const RationalMatrix& a, const ProductWeights& w, unsigned k) {
  RationalMatrix b = outer_product(w);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("A does not match the shape of R C^T");
  return phi(CoherentMatrixPair(a, std::move(b)), k);
}

Rational uniformize(const RationalMatrix& a, unsigned k) {
  if (!a.square() || a.rows() == 0) throw ValidationError("uniformize needs a non-empty square matrix");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && a(i, j) != 1) throw ValidationError("entry" + cell(i, j) + " is not 0 or 1");
  const long n = static_cast<long>(a.rows());
  return xi(a, k) / pow(Rational(n), 2 + k);
}

}  // namespace coherent
