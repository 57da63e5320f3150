#pragma once

#include <string_view>

#include "qperm/ncalg/poly.hpp"

namespace qperm {

// Polynomial text syntax
//
//   poly     := term { ('+' | '-') term } | '0'
//   term     := coeff [ '*' monomial ] | monomial
//   monomial := generator { '.' generator }
//   coeff    := integer [ '/' integer ]            (over Q)
//             | integer [ '/' integer ] | '(' cyclotomic-expression ')'   (over Q(z_m))
//
// A generator is any name in the alphabet (letters, digits, '_' and ':').
// Whitespace is ignored between tokens. Examples:
//   "1*u11.u12 - 1*u12.u11"     "u11 + u12 - 1"     "-3/2*p.q.p"

/// Throws std::invalid_argument with the offending position on bad input.
NCPoly parse_ncpoly(std::string_view text, const AlphabetPtr& alphabet);

/// Cyclotomic coefficients; z inside parentheses denotes zeta_order.
CycloPoly parse_cyclo_poly(std::string_view text, const AlphabetPtr& alphabet, unsigned order);

}  // namespace qperm
