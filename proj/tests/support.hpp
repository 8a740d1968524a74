#pragma once

#include <random>
#include <string>
#include <vector>

#include "macaulay/inverse_system.hpp"
#include "macaulay/matrix.hpp"
#include "macaulay/poly_text.hpp"

namespace macaulay::test {

inline DualPolynomial dual(const std::string& text, std::size_t n) { return parse_dual(text, n); }

inline JetPolynomial jet(const std::string& text, std::size_t n, int trunc) { return parse_jet(text, n, trunc); }

inline AlgebraPresentation presentation(std::size_t n, const std::vector<std::string>& gens) {
  AlgebraPresentation p{n, {}};
  for (const auto& g : gens) p.generators.push_back(parse_dual(g, n));
  return p;
}

inline RationalMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int bound = 5,
                                    double density = 1.0) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::uniform_int_distribution<int> den(1, 4);
  std::bernoulli_distribution keep(density);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng)) {
        m(i, j) = Rational(coeff(rng), den(rng));
        m(i, j).canonicalize();
      }
  return m;
}

// Whether f lies in the span of the basis, compared on plain coordinates.
inline bool in_span(const std::vector<JetPolynomial>& basis, const JetPolynomial& f, std::size_t n, int top) {
  std::vector<RationalVector> cols;
  for (const auto& b : basis) cols.push_back(basis_coordinates(b, top));
  const RationalMatrix m = RationalMatrix::from_columns(cols, truncated_dimension(n, top));
  return in_column_space(m, basis_coordinates(f, top));
}

}  // namespace macaulay::test
