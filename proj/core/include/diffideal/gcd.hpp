#pragma once

#include "diffideal/poly.hpp"

#include <map>

namespace diffideal {

/// Greatest common divisor over Q, normalized to an integer-primitive
/// polynomial with positive leading coefficient (so the gcd of coprime inputs
/// is 1). Uses recursive content / primitive-part pseudo-remainder sequences.
/// Throws DomainError when both inputs are zero.
MultiPoly multivariate_gcd(const MultiPoly& a, const MultiPoly& b);

/// Least common multiple, normalized like multivariate_gcd.
MultiPoly multivariate_lcm(const MultiPoly& a, const MultiPoly& b);

/// Coefficients of p viewed as a univariate polynomial in `symbol`.
std::map<Monomial::Exponent, MultiPoly> coefficients_in(const MultiPoly& p, std::size_t symbol);

/// Pseudo-remainder of a by b with respect to `symbol`; b must involve it or
/// be a nonzero constant in it.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t symbol);

} // namespace diffideal
