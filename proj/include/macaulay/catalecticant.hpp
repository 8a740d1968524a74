#pragma once

#include <span>

#include "macaulay/matrix.hpp"
#include "macaulay/polynomial.hpp"
#include "macaulay/sequences.hpp"

namespace macaulay {

/// Catalecticant of a nonzero form G of degree s: rows L with |L| = s - q,
/// columns i with |i| = q, entry beta_{L+i} where beta are G's dual-basis
/// coordinates. Column i holds the coordinates of d_i G.
RationalMatrix delta_matrix(const DualPolynomial& form, int q);

/// delta_matrix of each form stacked vertically, in input order. All forms
/// must be nonzero of one common degree.
RationalMatrix stacked_delta(std::span<const DualPolynomial> forms, int q);

/// h_j = rank(delta_matrix(G, s - j)), j = 0..s.
HilbertFunction hilbert_from_delta(const DualPolynomial& form);

/// True iff rank(stacked_delta(forms, i)) = min(dim R_i, t * dim R_{s-i})
/// for every i = 1..s. Throws DependentLeadingForms if the forms are
/// linearly dependent.
bool is_compressed_level(std::span<const DualPolynomial> forms);

/// Compressed Hilbert function of socle type E (E.values[s] > 0, size s + 1).
/// h_i = dim R_i below the initial degree v and sum_{u >= i} e_u dim R_{u-i}
/// from v on, v being the first degree where that sum drops below dim R_i.
HilbertFunction compressed_hf(std::size_t n, int s, const SocleType& socle);

/// The initial degree v used by compressed_hf (s + 1 when the bound never binds).
int compressed_initial_degree(std::size_t n, int s, const SocleType& socle);

/// max(0, dim R_{v-1} - sum_{u >= v} e_u dim R_{u-v+1}).
std::size_t socle_correction(std::size_t n, int v, const SocleType& socle);

}  // namespace macaulay
