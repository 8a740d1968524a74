#include "macaulay/automorphism.hpp"

#include "macaulay/errors.hpp"

namespace macaulay {

TruncatedAutomorphism::TruncatedAutomorphism(std::size_t num_vars, int truncation_order,
                                             std::vector<JetPolynomial> images)
    : num_vars_(num_vars), truncation_order_(truncation_order), images_(std::move(images)) {
  if (num_vars_ == 0 || truncation_order_ < 0) throw InvalidArgument("automorphism needs n >= 1 and s >= 0");
  if (images_.size() != num_vars_) throw InvalidArgument("automorphism needs one image per variable");
  for (auto& f : images_) {
    if (f.num_vars() != num_vars_) throw InvalidArgument("image has the wrong number of variables");
    if (f.constant_term() != 0) throw InvalidArgument("image has a nonzero constant term");
    if (f.truncation_order() != truncation_order_) {
      JetPolynomial g(num_vars_, truncation_order_);
      for (const auto& [e, c] : f.terms()) g.add_term(e, c);
      f = std::move(g);
    }
  }
  if (rank(linear_part()) != num_vars_) throw InvalidArgument("automorphism has a singular linear part");
}

TruncatedAutomorphism TruncatedAutomorphism::identity(std::size_t num_vars, int truncation_order) {
  std::vector<JetPolynomial> images;
  for (std::size_t j = 0; j < num_vars; ++j) images.push_back(JetPolynomial::variable(num_vars, truncation_order, j));
  return TruncatedAutomorphism(num_vars, truncation_order, std::move(images));
}

RationalMatrix TruncatedAutomorphism::linear_part() const {
  RationalMatrix m(num_vars_, num_vars_);
  for (std::size_t j = 0; j < num_vars_; ++j)
    for (std::size_t i = 0; i < num_vars_; ++i) m(i, j) = images_[j].coefficient(Exponent::unit(num_vars_, i));
  return m;
}

JetPolynomial TruncatedAutomorphism::apply(const Exponent& monomial) const {
  JetPolynomial out = JetPolynomial::constant(num_vars_, truncation_order_, 1);
  for (std::size_t j = 0; j < num_vars_; ++j)
    if (monomial[j] > 0) out = out * power(images_[j], monomial[j]);
  return out;
}

JetPolynomial TruncatedAutomorphism::apply(const JetPolynomial& f) const {
  JetPolynomial out(num_vars_, truncation_order_);
  for (const auto& [e, c] : f.terms())
    if (e.degree() <= truncation_order_) out += apply(e) * c;
  return out;
}

TruncatedAutomorphism compose(const TruncatedAutomorphism& phi, const TruncatedAutomorphism& psi) {
  if (phi.num_vars() != psi.num_vars() || phi.truncation_order() != psi.truncation_order())
    throw InvalidArgument("compose: automorphisms of different rings");
  std::vector<JetPolynomial> images;
  for (const auto& g : psi.images()) images.push_back(phi.apply(g));
  return TruncatedAutomorphism(phi.num_vars(), phi.truncation_order(), std::move(images));
}

std::size_t phi_parameter_count(std::size_t n, int p) { return n * forms_dimension(n, p + 1); }

TruncatedAutomorphism make_phi(std::size_t n, int s, int p, std::span<const Rational> a) {
  if (p < 1 || p > s) throw InvalidArgument("make_phi needs 1 <= p <= s");
  if (a.size() != phi_parameter_count(n, p)) throw InvalidArgument("make_phi: coefficient vector has the wrong length");
  const auto perturbations = monomials_of_degree(n, p + 1);
  std::vector<JetPolynomial> images;
  std::size_t k = 0;
  for (std::size_t j = 0; j < n; ++j) {
    JetPolynomial f = JetPolynomial::variable(n, s, j);
    for (const auto& i : perturbations) f.add_term(i, a[k++]);
    images.push_back(std::move(f));
  }
  return TruncatedAutomorphism(n, s, std::move(images));
}

RationalMatrix matrix_of(const TruncatedAutomorphism& phi) {
  const std::size_t n = phi.num_vars();
  const int s = phi.truncation_order();
  // powers[j][k] = phi(x_j)^k
  std::vector<std::vector<JetPolynomial>> powers(n);
  for (std::size_t j = 0; j < n; ++j) {
    powers[j].push_back(JetPolynomial::constant(n, s, 1));
    for (int k = 1; k <= s; ++k) powers[j].push_back(powers[j].back() * phi.image(j));
  }
  const auto basis = monomial_basis(n, s);
  RationalMatrix m(basis.size(), basis.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t c = 0; c < basis.size(); ++c) {
    JetPolynomial col = JetPolynomial::constant(n, s, 1);
    for (std::size_t j = 0; j < n; ++j)
      if (basis[c][j] > 0) col = col * powers[j][static_cast<std::size_t>(basis[c][j])];
    for (const auto& [e, v] : col.terms()) m(position_in_basis(e), c) = v;
  }
  return m;
}

RationalMatrix b_block(std::size_t n, int s, int p, std::span<const Rational> a) {
  if (p < 1 || p > s) throw InvalidArgument("b_block needs 1 <= p <= s");
  if (a.size() != phi_parameter_count(n, p)) throw InvalidArgument("b_block: coefficient vector has the wrong length");
  const auto rows = monomials_of_degree(n, s);
  const auto cols = monomials_of_degree(n, s - p);
  const auto perturbations = monomials_of_degree(n, p + 1);
  RationalMatrix b(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Exponent& w = cols[c];
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j] == 0) continue;
      const Exponent base = w - Exponent::unit(n, j);
      for (std::size_t k = 0; k < perturbations.size(); ++k)
        b(position_in_degree(base + perturbations[k]), c) += w[j] * a[j * perturbations.size() + k];
    }
  }
  return b;
}

DualPolynomial dual_apply(const TruncatedAutomorphism& phi, const DualPolynomial& g) {
  const int s = phi.truncation_order();
  if (g.num_vars() != phi.num_vars()) throw InvalidArgument("dual_apply: polynomial has the wrong number of variables");
  if (g.degree() > s) throw InvalidArgument("dual_apply: degree exceeds the truncation order");
  const RationalVector row = omega_star_vector(g, s);
  return from_omega_star_vector(phi.num_vars(), s, left_multiply(row, matrix_of(phi)));
}

}  // namespace macaulay
