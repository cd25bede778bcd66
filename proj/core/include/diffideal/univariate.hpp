#pragma once

#include "diffideal/poly.hpp"

#include <vector>

namespace diffideal {

/// Distinct rational roots of a nonzero polynomial that involves at most the
/// given symbol, in increasing order. Candidates come from the rational root
/// test (p divides the trailing, q the leading integer coefficient).
std::vector<BigRational> rational_roots(const MultiPoly& f, std::size_t symbol);

/// Square-free part f / gcd(f, df/dsymbol) of a univariate polynomial.
MultiPoly square_free_part(const MultiPoly& f, std::size_t symbol);

/// Prime factorization of |n| (n != 0) as (prime, multiplicity), ascending.
std::vector<std::pair<BigInteger, unsigned>> factor_integer(const BigInteger& n);

} // namespace diffideal
