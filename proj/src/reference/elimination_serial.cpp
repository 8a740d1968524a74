#include "macaulay/matrix.hpp"

namespace macaulay::reference {

RowEchelon reduced_row_echelon(const RationalMatrix& m) {
  RowEchelon out;
  RationalMatrix& a = out.reduced;
  a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t found = r;
    while (found < a.rows() && a(found, c) == 0) ++found;
    if (found == a.rows()) continue;
    if (found != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(found, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) { return reference::reduced_row_echelon(m).rank(); }

}  // namespace macaulay::reference
