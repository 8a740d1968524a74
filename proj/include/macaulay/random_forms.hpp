#pragma once

#include <random>

#include "macaulay/polynomial.hpp"

namespace macaulay {

/// Nonzero form of degree d, coefficients drawn uniformly from [-bound, bound].
DualPolynomial random_form(std::size_t n, int d, std::mt19937_64& rng, int bound = 1000);

/// Sum of random forms of degrees 0..d.
DualPolynomial random_polynomial(std::size_t n, int d, std::mt19937_64& rng, int bound = 1000);

/// t random forms of degree s, redrawn until they form a compressed level
/// system (gives up after `attempts` draws and throws InvariantViolation).
std::vector<DualPolynomial> random_compressed_level(std::size_t n, int s, std::size_t t, std::mt19937_64& rng,
                                                    int bound = 1000, int attempts = 200);

}  // namespace macaulay
