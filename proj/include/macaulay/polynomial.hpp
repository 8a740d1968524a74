#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "macaulay/exponent.hpp"
#include "macaulay/rational.hpp"

namespace macaulay {

namespace detail {

// Sparse term storage shared by both polynomial sides. Zero coefficients are
// never stored.
class TermMap {
 public:
  using Map = std::map<Exponent, Rational>;

  explicit TermMap(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const noexcept { return num_vars_; }
  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;
  /// Highest term degree, -1 for the zero polynomial.
  int degree() const;
  /// Lowest term degree, -1 for the zero polynomial.
  int order() const;
  bool is_homogeneous() const;

 protected:
  void accumulate(const Exponent& e, const Rational& c);
  void accumulate_all(const TermMap& other, const Rational& scale);
  void check_compatible(const TermMap& other) const;
  void scale(const Rational& c);

  std::size_t num_vars_;
  Map terms_;

  friend bool operator==(const TermMap&, const TermMap&) = default;
};

}  // namespace detail

/// Element of P = K[y_1..y_n], stored in the plain monomial basis y^a.
class DualPolynomial : public detail::TermMap {
 public:
  explicit DualPolynomial(std::size_t num_vars = 0) : TermMap(num_vars) {}
  static DualPolynomial monomial(const Exponent& e, const Rational& c = 1);

  void add_term(const Exponent& e, const Rational& c);

  DualPolynomial& operator+=(const DualPolynomial& other);
  DualPolynomial& operator-=(const DualPolynomial& other);
  DualPolynomial& operator*=(const Rational& c);
  friend DualPolynomial operator+(DualPolynomial a, const DualPolynomial& b) { return a += b; }
  friend DualPolynomial operator-(DualPolynomial a, const DualPolynomial& b) { return a -= b; }
  friend DualPolynomial operator*(DualPolynomial a, const Rational& c) { return a *= c; }
  friend DualPolynomial operator*(const Rational& c, DualPolynomial a) { return a *= c; }
  friend DualPolynomial operator-(DualPolynomial a) { return a *= -1; }

  friend bool operator==(const DualPolynomial&, const DualPolynomial&) = default;
};

/// Element of R / M^{s+1}: a power series truncated above degree s.
class JetPolynomial : public detail::TermMap {
 public:
  JetPolynomial(std::size_t num_vars, int truncation_order);
  static JetPolynomial constant(std::size_t num_vars, int truncation_order, const Rational& c);
  static JetPolynomial variable(std::size_t num_vars, int truncation_order, std::size_t var);
  static JetPolynomial monomial(const Exponent& e, int truncation_order, const Rational& c = 1);

  int truncation_order() const noexcept { return truncation_order_; }
  /// Terms of degree above the truncation order are dropped.
  void add_term(const Exponent& e, const Rational& c);
  Rational constant_term() const;

  JetPolynomial& operator+=(const JetPolynomial& other);
  JetPolynomial& operator-=(const JetPolynomial& other);
  JetPolynomial& operator*=(const Rational& c);
  friend JetPolynomial operator+(JetPolynomial a, const JetPolynomial& b) { return a += b; }
  friend JetPolynomial operator-(JetPolynomial a, const JetPolynomial& b) { return a -= b; }
  friend JetPolynomial operator*(JetPolynomial a, const Rational& c) { return a *= c; }
  /// Truncated product; the result keeps the smaller truncation order.
  friend JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b);

  friend bool operator==(const JetPolynomial&, const JetPolynomial&) = default;

 private:
  int truncation_order_;
};

JetPolynomial power(const JetPolynomial& base, int k);

/// x^a o g: partial differentiation by the monomial's exponent.
DualPolynomial contract(const Exponent& a, const DualPolynomial& g);
/// f o g = f(d/dy_1, ..., d/dy_n)(g).
DualPolynomial contract(const JetPolynomial& f, const DualPolynomial& g);
/// <f, g>: the constant term of f o g.
Rational pairing(const JetPolynomial& f, const DualPolynomial& g);

DualPolynomial homogeneous_component(const DualPolynomial& g, int degree);
DualPolynomial leading_form(const DualPolynomial& g);

/// Coordinates of a form of degree `degree` in the dual basis (x^a)* = y^a / a!,
/// indexed by monomials_of_degree. The coordinate at a is a! * coeff(y^a).
/// Throws InvalidArgument if g has a term of another degree.
RationalVector omega_star_coordinates(const DualPolynomial& g, int degree);
/// Same, using g's own degree; g must be nonzero and homogeneous.
RationalVector omega_star_coordinates(const DualPolynomial& g);
DualPolynomial from_omega_star(std::size_t num_vars, int degree, std::span<const Rational> coords);

/// Dual-basis coordinates over all of P_{<= max_degree}, in monomial_basis order.
RationalVector omega_star_vector(const DualPolynomial& g, int max_degree);
DualPolynomial from_omega_star_vector(std::size_t num_vars, int max_degree, std::span<const Rational> coords);

/// Plain (monomial) coefficients of a jet over monomial_basis(n, max_degree).
RationalVector basis_coordinates(const JetPolynomial& f, int max_degree);
JetPolynomial from_basis_coordinates(std::size_t num_vars, int max_degree, int truncation_order,
                                     std::span<const Rational> coords);

/// Basis of the degree-j slice (I^perp)_j of the module generated by `gs`:
/// the degree-j leading parts of module elements of degree <= j, returned as
/// forms of degree j in reduced echelon order.
std::vector<DualPolynomial> derivative_span(std::span<const DualPolynomial> gs, int degree);

}  // namespace macaulay
