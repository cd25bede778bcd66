#pragma once

#include "diffideal/poly.hpp"
#include "diffideal/ratfunc.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace diffideal {

/// Polynomial text: terms joined by + and -, rational coefficients p/q, powers
/// with ^, explicit * between factors (implicit multiplication is rejected).
/// Parentheses and / between expressions are accepted when parsing rational
/// functions. Errors are ParseError carrying `line` and a 1-based column.
MultiPoly parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line = 1);
RationalFunction parse_rational_function(const RingPtr& ring, std::string_view text,
                                         std::size_t line = 1);

/// Canonical rendering in the ring order, e.g. "3/2*X^2*Y - 1".
std::string to_string(const MultiPoly& p);
std::string to_string(const Monomial& m, const Ring& ring);
/// "num" for polynomials, otherwise "(num)/(den)"; parentheses are dropped
/// around a monic numerator monomial and a denominator like Y^2, so the text
/// always parses back to the same function.
std::string to_string(const RationalFunction& r);

} // namespace diffideal
