#include <algorithm>
#include <vector>

#include <omp.h>

#include "macaulay/errors.hpp"
#include "macaulay/matrix.hpp"

namespace macaulay {
namespace {

// Below this many entry updates per pivot step the thread fork costs more
// than it saves.
constexpr std::size_t kParallelWork = 4096;

using IntegerRows = std::vector<std::vector<Integer>>;

// Scale every row by the lcm of its denominators.
IntegerRows integer_rows(const RationalMatrix& m) {
  IntegerRows rows(m.rows(), std::vector<Integer>(m.cols()));
#pragma omp parallel for schedule(static) if (m.rows() * m.cols() > kParallelWork)
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer lcm = 1;
    for (const auto& x : m.row(i)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = m(i, j);
      if (x == 0) continue;
      rows[i][j] = x.get_num() * (lcm / x.get_den());
    }
  }
  return rows;
}

// Fraction-free forward elimination in place. Each entry below the current
// pivot row becomes (p * a_ij - a_ic * a_rj) / previous_pivot, an exact
// division because the result is a minor of the input.
std::vector<std::size_t> bareiss_forward(IntegerRows& a, std::size_t cols) {
  const std::size_t nrows = a.size();
  std::vector<std::size_t> pivots;
  Integer previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < nrows; ++c) {
    std::size_t found = r;
    while (found < nrows && a[found][c] == 0) ++found;
    if (found == nrows) continue;
    std::swap(a[r], a[found]);
    const std::vector<Integer>& pivot_row = a[r];
    const Integer pivot = pivot_row[c];
    const std::size_t work = (nrows - r - 1) * (cols - c);
#pragma omp parallel for schedule(dynamic, 4) if (work > kParallelWork)
    for (std::size_t i = r + 1; i < nrows; ++i) {
      std::vector<Integer>& row = a[i];
      const Integer factor = row[c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = pivot * row[j];
        if (factor != 0 && pivot_row[j] != 0) t -= factor * pivot_row[j];
        if (previous != 1 && t != 0) mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
        row[j] = std::move(t);
      }
      row[c] = 0;
    }
    previous = pivot;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> pivot_columns(const RationalMatrix& m) {
  IntegerRows a = integer_rows(m);
  return bareiss_forward(a, m.cols());
}

std::size_t rank(const RationalMatrix& m) { return pivot_columns(m).size(); }

RowEchelon reduced_row_echelon(const RationalMatrix& m) {
  IntegerRows a = integer_rows(m);
  RowEchelon out;
  out.pivot_columns = bareiss_forward(a, m.cols());
  const std::size_t rk = out.pivot_columns.size();
  RationalMatrix& red = out.reduced;
  red = RationalMatrix(m.rows(), m.cols());

  // Normalise pivot rows, then clear above each pivot (rows are independent).
#pragma omp parallel for schedule(static) if (rk * m.cols() > kParallelWork)
  for (std::size_t k = 0; k < rk; ++k) {
    const std::size_t c = out.pivot_columns[k];
    const Integer& p = a[k][c];
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (a[k][j] == 0) continue;
      Rational v(a[k][j], p);
      v.canonicalize();
      red(k, j) = std::move(v);
    }
  }
  for (std::size_t k = rk; k-- > 0;) {
    const std::size_t c = out.pivot_columns[k];
    const auto pivot_row = red.row(k);
#pragma omp parallel for schedule(static) if (k * (m.cols() - c) > kParallelWork)
    for (std::size_t i = 0; i < k; ++i) {
      Rational f = red(i, c);
      if (f == 0) continue;
      auto row = red.row(i);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (pivot_row[j] != 0) row[j] -= f * pivot_row[j];
    }
  }
  return out;
}

std::optional<RationalVector> solve(const RationalMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw InvalidArgument("solve: right-hand side length does not match row count");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::copy(m.row(i).begin(), m.row(i).end(), aug.row(i).begin());
    aug(i, m.cols()) = b[i];
  }
  RowEchelon e = reduced_row_echelon(aug);
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return std::nullopt;
  RationalVector x(m.cols());
  for (std::size_t k = 0; k < e.rank(); ++k) x[e.pivot_columns[k]] = e.reduced(k, m.cols());
  return x;
}

bool in_column_space(const RationalMatrix& m, std::span<const Rational> b) { return solve(m, b).has_value(); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  RowEchelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < e.rank(); ++k) v[e.pivot_columns[k]] = -e.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace macaulay
