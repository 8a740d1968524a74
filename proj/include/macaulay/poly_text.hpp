#pragma once

#include <string>
#include <string_view>

#include "macaulay/polynomial.hpp"

namespace macaulay {

// Text grammar: terms joined by '+' or '-'; a term is
//   [coeff*]v<i>[^e][*v<j>[^e]]...   or a bare coeff,
// coeff an integer or p/q, v the variable letter ('y' on the dual side, 'x' on
// the series side). Whitespace is ignored. Example: "y1^3*y2^2 + y2^4".
// Errors are ParseError carrying the offending offset.

DualPolynomial parse_dual(std::string_view text, std::size_t num_vars);
JetPolynomial parse_jet(std::string_view text, std::size_t num_vars, int truncation_order);

/// Terms in descending deg-lex order; "0" for the zero polynomial.
std::string format(const DualPolynomial& g);
std::string format(const JetPolynomial& f);

}  // namespace macaulay
