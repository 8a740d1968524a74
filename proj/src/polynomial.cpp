#include "macaulay/polynomial.hpp"

#include <algorithm>

#include "macaulay/detail/graded_span.hpp"
#include "macaulay/errors.hpp"

namespace macaulay {

namespace detail {

Rational TermMap::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int TermMap::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

int TermMap::order() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

bool TermMap::is_homogeneous() const { return degree() == order(); }

void TermMap::accumulate(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  if (e.num_vars() != num_vars_) throw InvalidArgument("monomial has the wrong number of variables");
  if (!e.is_valid()) throw InvalidArgument("negative exponent");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TermMap::accumulate_all(const TermMap& other, const Rational& scale) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) accumulate(e, c * scale);
}

void TermMap::check_compatible(const TermMap& other) const {
  if (other.num_vars_ != num_vars_) throw InvalidArgument("polynomials in different numbers of variables");
}

void TermMap::scale(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& [e, v] : terms_) v *= c;
}

}  // namespace detail

DualPolynomial DualPolynomial::monomial(const Exponent& e, const Rational& c) {
  DualPolynomial g(e.num_vars());
  g.add_term(e, c);
  return g;
}

void DualPolynomial::add_term(const Exponent& e, const Rational& c) { accumulate(e, c); }

DualPolynomial& DualPolynomial::operator+=(const DualPolynomial& other) {
  accumulate_all(other, 1);
  return *this;
}

DualPolynomial& DualPolynomial::operator-=(const DualPolynomial& other) {
  accumulate_all(other, -1);
  return *this;
}

DualPolynomial& DualPolynomial::operator*=(const Rational& c) {
  scale(c);
  return *this;
}

JetPolynomial::JetPolynomial(std::size_t num_vars, int truncation_order)
    : TermMap(num_vars), truncation_order_(truncation_order) {
  if (truncation_order < 0) throw InvalidArgument("negative truncation order");
}

JetPolynomial JetPolynomial::constant(std::size_t num_vars, int truncation_order, const Rational& c) {
  JetPolynomial f(num_vars, truncation_order);
  f.add_term(Exponent(num_vars), c);
  return f;
}

JetPolynomial JetPolynomial::variable(std::size_t num_vars, int truncation_order, std::size_t var) {
  JetPolynomial f(num_vars, truncation_order);
  f.add_term(Exponent::unit(num_vars, var), 1);
  return f;
}

JetPolynomial JetPolynomial::monomial(const Exponent& e, int truncation_order, const Rational& c) {
  JetPolynomial f(e.num_vars(), truncation_order);
  f.add_term(e, c);
  return f;
}

void JetPolynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.degree() > truncation_order_) return;
  accumulate(e, c);
}

Rational JetPolynomial::constant_term() const { return coefficient(Exponent(num_vars_)); }

JetPolynomial& JetPolynomial::operator+=(const JetPolynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

JetPolynomial& JetPolynomial::operator-=(const JetPolynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

JetPolynomial& JetPolynomial::operator*=(const Rational& c) {
  scale(c);
  return *this;
}

JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b) {
  if (a.num_vars() != b.num_vars()) throw InvalidArgument("jets in different numbers of variables");
  JetPolynomial out(a.num_vars(), std::min(a.truncation_order(), b.truncation_order()));
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      if (ea.degree() + eb.degree() > out.truncation_order()) break;  // b's terms ascend in degree
      out.add_term(ea + eb, ca * cb);
    }
  return out;
}

JetPolynomial power(const JetPolynomial& base, int k) {
  if (k < 0) throw InvalidArgument("negative power");
  JetPolynomial out = JetPolynomial::constant(base.num_vars(), base.truncation_order(), 1);
  for (int i = 0; i < k; ++i) out = out * base;
  return out;
}

DualPolynomial contract(const Exponent& a, const DualPolynomial& g) {
  if (a.num_vars() != g.num_vars()) throw InvalidArgument("contract: variable-count mismatch");
  DualPolynomial out(g.num_vars());
  const int da = a.degree();
  for (const auto& [b, c] : g.terms()) {
    if (b.degree() < da || !a.divides(b)) continue;
    // b! / (b - a)! as a falling factorial per variable.
    Integer f = 1;
    for (std::size_t i = 0; i < a.num_vars(); ++i)
      for (int k = 0; k < a[i]; ++k) f *= b[i] - k;
    out.add_term(b - a, c * f);
  }
  return out;
}

DualPolynomial contract(const JetPolynomial& f, const DualPolynomial& g) {
  if (f.num_vars() != g.num_vars()) throw InvalidArgument("contract: variable-count mismatch");
  DualPolynomial out(g.num_vars());
  for (const auto& [a, c] : f.terms()) out += contract(a, g) * c;
  return out;
}

Rational pairing(const JetPolynomial& f, const DualPolynomial& g) {
  return contract(f, g).coefficient(Exponent(g.num_vars()));
}

DualPolynomial homogeneous_component(const DualPolynomial& g, int degree) {
  DualPolynomial out(g.num_vars());
  for (const auto& [e, c] : g.terms())
    if (e.degree() == degree) out.add_term(e, c);
  return out;
}

DualPolynomial leading_form(const DualPolynomial& g) { return homogeneous_component(g, g.degree()); }

RationalVector omega_star_coordinates(const DualPolynomial& g, int degree) {
  RationalVector v(forms_dimension(g.num_vars(), degree));
  for (const auto& [e, c] : g.terms()) {
    if (e.degree() != degree) throw InvalidArgument("omega_star_coordinates: polynomial is not a form of the given degree");
    v[position_in_degree(e)] = c * factorial(e);
  }
  return v;
}

RationalVector omega_star_coordinates(const DualPolynomial& g) {
  if (g.is_zero() || !g.is_homogeneous()) throw InvalidArgument("omega_star_coordinates: expected a nonzero form");
  return omega_star_coordinates(g, g.degree());
}

DualPolynomial from_omega_star(std::size_t num_vars, int degree, std::span<const Rational> coords) {
  auto exps = monomials_of_degree(num_vars, degree);
  if (coords.size() != exps.size()) throw InvalidArgument("from_omega_star: coordinate count mismatch");
  DualPolynomial g(num_vars);
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (coords[i] != 0) g.add_term(exps[i], coords[i] / Rational(factorial(exps[i])));
  return g;
}

RationalVector omega_star_vector(const DualPolynomial& g, int max_degree) {
  if (g.degree() > max_degree) throw InvalidArgument("omega_star_vector: degree exceeds bound");
  RationalVector v(truncated_dimension(g.num_vars(), max_degree));
  for (const auto& [e, c] : g.terms()) v[position_in_basis(e)] = c * factorial(e);
  return v;
}

DualPolynomial from_omega_star_vector(std::size_t num_vars, int max_degree, std::span<const Rational> coords) {
  auto exps = monomial_basis(num_vars, max_degree);
  if (coords.size() != exps.size()) throw InvalidArgument("from_omega_star_vector: coordinate count mismatch");
  DualPolynomial g(num_vars);
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (coords[i] != 0) g.add_term(exps[i], coords[i] / Rational(factorial(exps[i])));
  return g;
}

RationalVector basis_coordinates(const JetPolynomial& f, int max_degree) {
  RationalVector v(truncated_dimension(f.num_vars(), max_degree));
  for (const auto& [e, c] : f.terms())
    if (e.degree() <= max_degree) v[position_in_basis(e)] = c;
  return v;
}

JetPolynomial from_basis_coordinates(std::size_t num_vars, int max_degree, int truncation_order,
                                     std::span<const Rational> coords) {
  auto exps = monomial_basis(num_vars, max_degree);
  if (coords.size() != exps.size()) throw InvalidArgument("from_basis_coordinates: coordinate count mismatch");
  JetPolynomial f(num_vars, truncation_order);
  for (std::size_t i = 0; i < exps.size(); ++i) f.add_term(exps[i], coords[i]);
  return f;
}

std::vector<DualPolynomial> derivative_span(std::span<const DualPolynomial> gs, int degree) {
  const int top = detail::max_degree(gs);
  if (degree < 0 || degree > top) return {};
  const std::size_t n = gs.front().num_vars();
  auto spanning = detail::module_spanning_set(gs);
  return detail::filtered_echelon(spanning, n, top).leading_forms(degree);
}

}  // namespace macaulay
