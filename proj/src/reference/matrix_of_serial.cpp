#include "macaulay/automorphism.hpp"

namespace macaulay::reference {

RationalMatrix matrix_of(const TruncatedAutomorphism& phi) {
  const auto basis = monomial_basis(phi.num_vars(), phi.truncation_order());
  RationalMatrix m(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    JetPolynomial col = JetPolynomial::constant(phi.num_vars(), phi.truncation_order(), 1);
    for (std::size_t j = 0; j < phi.num_vars(); ++j)
      for (int k = 0; k < basis[c][j]; ++k) col = col * phi.image(j);
    for (const auto& [e, v] : col.terms()) m(position_in_basis(e), c) = v;
  }
  return m;
}

}  // namespace macaulay::reference
