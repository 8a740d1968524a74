#include "macaulay/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "macaulay/errors.hpp"

namespace macaulay {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, std::size_t rows) {
  RationalMatrix out(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InvalidArgument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = columns[j][i];
  }
  return out;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidArgument("row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), out.row(i).begin());
  }
  return out;
}

RationalVector RationalMatrix::column(std::size_t j) const {
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RationalMatrix RationalMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                                     std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw InvalidArgument("block out of range");
  RationalMatrix out(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x == 0; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product dimension mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw InvalidArgument("matrix-vector dimension mismatch");
  RationalVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && x[j] != 0) out[i] += a(i, j) * x[j];
  return out;
}

RationalVector left_multiply(std::span<const Rational> row, const RationalMatrix& m) {
  if (row.size() != m.rows()) throw InvalidArgument("vector-matrix dimension mismatch");
  RationalVector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (row[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out[j] += row[i] * m(i, j);
  }
  return out;
}

RationalMatrix vstack(std::span<const RationalMatrix> blocks) {
  if (blocks.empty()) return {};
  std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw InvalidArgument("vstack column mismatch");
    rows += b.rows();
  }
  RationalMatrix out(rows, cols);
  std::size_t at = 0;
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.rows(); ++i, ++at) std::copy(b.row(i).begin(), b.row(i).end(), out.row(at).begin());
  return out;
}

std::string to_text(const RationalMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m(i, j));
    os << '\n';
  }
  return os.str();
}

}  // namespace macaulay
