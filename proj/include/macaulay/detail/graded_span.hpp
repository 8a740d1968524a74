#pragma once

#include <span>
#include <vector>

#include "macaulay/matrix.hpp"
#include "macaulay/polynomial.hpp"

namespace macaulay::detail {

// Coordinates over P_{<= top} with columns grouped by degree, highest degree
// first. Row-reducing spanning vectors in this layout exposes the filtration
// by degree: rows whose pivot sits in degree j span the degree-j leading parts
// of the elements of degree <= j.
class DescendingLayout {
 public:
  DescendingLayout(std::size_t num_vars, int top_degree);

  std::size_t num_vars() const noexcept { return num_vars_; }
  int top_degree() const noexcept { return top_; }
  std::size_t size() const noexcept { return exponents_.size(); }
  std::size_t column(const Exponent& e) const;
  const Exponent& exponent(std::size_t col) const { return exponents_[col]; }
  int degree_of(std::size_t col) const { return exponents_[col].degree(); }

  RationalVector coordinates(const DualPolynomial& g) const;
  DualPolynomial polynomial(std::span<const Rational> coords) const;
  RationalMatrix rows_of(std::span<const DualPolynomial> polys) const;

 private:
  std::size_t num_vars_;
  int top_;
  std::vector<Exponent> exponents_;
};

/// Every contraction x^c o g over generators g and exponents c with
/// |c| <= deg g; c = 0 (the generator itself) only when `with_generators`.
std::vector<DualPolynomial> module_spanning_set(std::span<const DualPolynomial> gs, bool with_generators = true);

/// Highest degree among nonzero polynomials, -1 if all are zero.
int max_degree(std::span<const DualPolynomial> gs);

struct FilteredEchelon {
  DescendingLayout layout;
  RowEchelon echelon;

  /// Number of pivots falling in each degree 0..top.
  std::vector<std::size_t> pivots_per_degree() const;
  /// Degree-j parts of the echelon rows whose pivot has degree j.
  std::vector<DualPolynomial> leading_forms(int degree) const;
};

FilteredEchelon filtered_echelon(std::span<const DualPolynomial> spanning, std::size_t num_vars, int top_degree);

}  // namespace macaulay::detail
