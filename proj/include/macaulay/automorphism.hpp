#pragma once

#include <span>
#include <vector>

#include "macaulay/matrix.hpp"
#include "macaulay/polynomial.hpp"

namespace macaulay {

/// K-algebra automorphism of R / M^{s+1}, fixed by the images of x_1..x_n.
class TruncatedAutomorphism {
 public:
  /// Throws InvalidArgument on a constant term, a wrong size, or a singular
  /// linear part.
  TruncatedAutomorphism(std::size_t num_vars, int truncation_order, std::vector<JetPolynomial> images);

  static TruncatedAutomorphism identity(std::size_t num_vars, int truncation_order);

  std::size_t num_vars() const noexcept { return num_vars_; }
  int truncation_order() const noexcept { return truncation_order_; }
  const std::vector<JetPolynomial>& images() const noexcept { return images_; }
  const JetPolynomial& image(std::size_t var) const { return images_[var]; }

  /// f(phi(x_1), ..., phi(x_n)), truncated at s.
  JetPolynomial apply(const JetPolynomial& f) const;
  JetPolynomial apply(const Exponent& monomial) const;

  /// n x n matrix whose column j holds the linear coefficients of phi(x_j).
  RationalMatrix linear_part() const;

  friend bool operator==(const TruncatedAutomorphism&, const TruncatedAutomorphism&) = default;

 private:
  std::size_t num_vars_;
  int truncation_order_;
  std::vector<JetPolynomial> images_;
};

/// (phi o psi)(f) = phi(psi(f)). With matrix_of's column convention this gives
/// matrix_of(compose(phi, psi)) = matrix_of(phi) * matrix_of(psi).
TruncatedAutomorphism compose(const TruncatedAutomorphism& phi, const TruncatedAutomorphism& psi);

/// Number of perturbation coefficients of make_phi: n * binom(n + p, n - 1).
std::size_t phi_parameter_count(std::size_t n, int p);

/// x_j -> x_j + sum_{|i| = p+1} a^j_i x^i. Coefficients are laid out j-major,
/// i in monomials_of_degree order.
TruncatedAutomorphism make_phi(std::size_t n, int s, int p, std::span<const Rational> a);

/// Matrix of phi on the basis monomial_basis(n, s): column J holds the
/// coefficients of phi(x^J). Columns are built in parallel.
RationalMatrix matrix_of(const TruncatedAutomorphism& phi);

/// Block of matrix_of(make_phi(n, s, p, a)) with rows |L| = s and columns
/// |W| = s - p, from the closed formula sum_{W - d_j + i = L} w_j a^j_i.
RationalMatrix b_block(std::size_t n, int s, int p, std::span<const Rational> a);

/// F with [F] = [g] * matrix_of(phi) in dual-basis coordinates, i.e.
/// <w, F> = <phi(w), g> for every monomial w. Requires deg g <= s.
DualPolynomial dual_apply(const TruncatedAutomorphism& phi, const DualPolynomial& g);

namespace reference {
// Column-by-column expansion with no power caching and no threads.
RationalMatrix matrix_of(const TruncatedAutomorphism& phi);
}  // namespace reference

}  // namespace macaulay
