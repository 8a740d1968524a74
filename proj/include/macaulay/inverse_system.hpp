#pragma once

#include <string>
#include <vector>

#include "macaulay/polynomial.hpp"
#include "macaulay/sequences.hpp"

namespace macaulay {

/// A = R / Ann_R(G_1, ..., G_t), given by its dual generators.
struct AlgebraPresentation {
  std::size_t num_vars = 0;
  std::vector<DualPolynomial> generators;

  int socle_degree() const;
  std::vector<int> degrees() const;
  std::vector<DualPolynomial> leading_forms() const;
};

/// Throws DependentLeadingForms (with a witness relation) unless the leading
/// forms G_r[d_r] are linearly independent; InvalidArgument for an empty or
/// mis-sized presentation.
void macaulay_validate(const AlgebraPresentation& pres);

/// Basis of { f in R_d : f o G_r = 0 for all r } (homogeneous f of degree d).
std::vector<JetPolynomial> annihilator_slice(const AlgebraPresentation& pres, int d);

/// Basis of { f in R_{<= d}, f(0) = 0 : f o G_r = 0 for all r }.
std::vector<JetPolynomial> annihilator_upto(const AlgebraPresentation& pres, int d);

/// h_i = dim (I^perp)_i, via the degree filtration of the dual module.
HilbertFunction hilbert_function(const AlgebraPresentation& pres);

/// Socle type of A, computed in A itself. A is realised faithfully as the
/// image of f -> (f o G_1, ..., f o G_t); multiplication by x_k acts as
/// contraction, so the socle is the set of images whose components are
/// constants, and m^i is the image of the monomials of degree >= i.
SocleType socle_type(const AlgebraPresentation& pres);

/// hilbert_function(pres) == compressed_hf(n, s, socle_type(pres)).
bool is_compressed(const AlgebraPresentation& pres);

/// Human-readable remarks, e.g. type differing from the generator count.
std::vector<std::string> presentation_warnings(const AlgebraPresentation& pres);

namespace detail {
/// h_i = dim m^i - dim m^{i+1} computed on A's faithful image; an independent
/// route to hilbert_function used for cross-checking.
HilbertFunction hilbert_function_by_filtration(const AlgebraPresentation& pres);
}  // namespace detail

}  // namespace macaulay
