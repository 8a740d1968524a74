#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace macaulay {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Accepts "p" or "p/q" with an optional sign; throws InvalidArgument otherwise.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned k);

/// binom(n, k) as a machine integer; zero when k > n.
std::size_t binomial(std::size_t n, std::size_t k);

bool is_zero_vector(const RationalVector& v);

}  // namespace macaulay
