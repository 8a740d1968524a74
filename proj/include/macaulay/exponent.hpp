#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "macaulay/rational.hpp"

namespace macaulay {

/// Multi-index (a_1, ..., a_n) of a monomial x^a or y^a. Parts may go
/// negative in intermediate arithmetic; `is_valid()` says whether it names a
/// monomial.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t num_vars) : parts_(num_vars, 0) {}
  explicit Exponent(std::vector<int> parts) : parts_(std::move(parts)) {}
  Exponent(std::initializer_list<int> parts) : parts_(parts) {}

  static Exponent unit(std::size_t num_vars, std::size_t var);

  std::size_t num_vars() const noexcept { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int& operator[](std::size_t i) { return parts_[i]; }
  std::span<const int> parts() const noexcept { return parts_; }

  int degree() const;
  bool is_valid() const;
  /// Componentwise <=.
  bool divides(const Exponent& other) const;

  Exponent& operator+=(const Exponent& other);
  Exponent& operator-=(const Exponent& other);
  friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
  friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }

  friend bool operator==(const Exponent&, const Exponent&) = default;
  /// Deg-lex with x_1 > ... > x_n: total degree first, then lexicographic.
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

 private:
  std::vector<int> parts_;
};

/// a! = a_1! ... a_n!
Integer factorial(const Exponent& a);

/// dim of the forms of degree d in n variables: binom(n - 1 + d, n - 1).
std::size_t forms_dimension(std::size_t n, int d);
/// dim of R / M^{s+1}: binom(n + s, s).
std::size_t truncated_dimension(std::size_t n, int s);

// Every matrix in the library indexes monomials through these enumerations.
// Within a degree the order is deg-lex descending (x_1^d first); across
// degrees it is ascending, which is the basis order of R / M^{s+1}.

std::vector<Exponent> monomials_of_degree(std::size_t n, int d);
std::vector<Exponent> monomial_basis(std::size_t n, int max_degree);
/// Index of `e` inside monomials_of_degree(n, e.degree()).
std::size_t position_in_degree(const Exponent& e);
/// Index of `e` inside monomial_basis(n, s) for any s >= e.degree().
std::size_t position_in_basis(const Exponent& e);

}  // namespace macaulay
