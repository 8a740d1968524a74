#include "macaulay/random_forms.hpp"

#include "macaulay/catalecticant.hpp"
#include "macaulay/errors.hpp"

namespace macaulay {

DualPolynomial random_form(std::size_t n, int d, std::mt19937_64& rng, int bound) {
  if (bound < 1) throw InvalidArgument("random_form: bound must be positive");
  std::uniform_int_distribution<int> coeff(-bound, bound);
  DualPolynomial g(n);
  while (g.is_zero())
    for (const auto& e : monomials_of_degree(n, d)) g.add_term(e, coeff(rng));
  return g;
}

DualPolynomial random_polynomial(std::size_t n, int d, std::mt19937_64& rng, int bound) {
  DualPolynomial g(n);
  for (int k = 0; k <= d; ++k) g += random_form(n, k, rng, bound);
  return g;
}

std::vector<DualPolynomial> random_compressed_level(std::size_t n, int s, std::size_t t, std::mt19937_64& rng,
                                                    int bound, int attempts) {
  for (int k = 0; k < attempts; ++k) {
    std::vector<DualPolynomial> forms;
    for (std::size_t r = 0; r < t; ++r) forms.push_back(random_form(n, s, rng, bound));
    try {
      if (is_compressed_level(forms)) return forms;
    } catch (const DependentLeadingForms&) {
    }
  }
  throw InvariantViolation("no compressed level system found by sampling");
}

}  // namespace macaulay
