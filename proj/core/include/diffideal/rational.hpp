#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace diffideal {

/// Exact rational number. mpq_class keeps numerator and denominator coprime
/// with a positive denominator once canonicalized; every constructor below
/// returns canonical values.
using BigRational = mpq_class;
using BigInteger = mpz_class;

BigRational make_rational(const BigInteger& num, const BigInteger& den);

/// Parses "p" or "p/q" (optional leading sign). Throws DomainError on bad
/// input and DivisionByZero on q = 0.
BigRational parse_rational(std::string_view text);

std::string to_string(const BigRational& q);
std::string to_string(const BigInteger& z);

inline bool is_zero(const BigRational& q) { return sgn(q) == 0; }
inline bool is_one(const BigRational& q) { return q == 1; }

} // namespace diffideal
