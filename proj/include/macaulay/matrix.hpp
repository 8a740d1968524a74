#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "macaulay/rational.hpp"

namespace macaulay {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  std::span<Rational> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
  RationalVector column(std::size_t j) const;

  RationalMatrix transpose() const;
  RationalMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  bool is_zero() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x);
/// Row vector times matrix.
RationalVector left_multiply(std::span<const Rational> row, const RationalMatrix& m);

/// Vertical concatenation; all blocks must share a column count.
RationalMatrix vstack(std::span<const RationalMatrix> blocks);

/// One row per line, entries separated by single spaces.
std::string to_text(const RationalMatrix& m);

/// Reduced row echelon form. Pivot rule: columns are scanned left to right and
/// the pivot is the first nonzero entry from the top among unused rows.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

// Fraction-free (Bareiss) elimination with OpenMP-parallel row updates.
RowEchelon reduced_row_echelon(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
/// Pivot columns of the (non-reduced) echelon form; cheaper than the full RREF.
std::vector<std::size_t> pivot_columns(const RationalMatrix& m);

/// Some x with m*x = b (free variables zero), or nullopt if b is outside the column space.
std::optional<RationalVector> solve(const RationalMatrix& m, std::span<const Rational> b);
bool in_column_space(const RationalMatrix& m, std::span<const Rational> b);
/// Basis of the right null space, one vector per free column, ascending.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

namespace reference {
// Plain Gauss-Jordan over the rationals, single-threaded. Kept as the test
// oracle and benchmark baseline for the fraction-free kernel.
RowEchelon reduced_row_echelon(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
}  // namespace reference

}  // namespace macaulay
