#pragma once

#include "diffideal/poly.hpp"

namespace diffideal {

/// Quotient num/den of polynomials, always held in canonical form: the gcd of
/// numerator and denominator is a unit and the denominator is monic under the
/// ring order. Structural equality is therefore equality of functions.
class RationalFunction {
public:
  explicit RationalFunction(RingPtr ring);
  RationalFunction(const MultiPoly& p); // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when den = 0.
  RationalFunction(const MultiPoly& num, const MultiPoly& den);

  /// Builds without simplification; only for callers that already hold a
  /// canonical pair (and for tests of unreduced representatives).
  static RationalFunction unreduced(MultiPoly num, MultiPoly den);

  const RingPtr& ring() const { return num_.ring(); }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Element of Q.
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool involves_variables() const { return num_.involves_variables() || den_.involves_variables(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction pow(int n) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  struct Raw {};
  RationalFunction(Raw, MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {}

  MultiPoly num_;
  MultiPoly den_;
};

/// Canonical form of num/den (cancel the gcd, make den monic).
RationalFunction ratfunc_simplify(const RationalFunction& r);

/// Cross-multiplication test, valid for unreduced representatives.
bool equivalent(const RationalFunction& a, const RationalFunction& b);

} // namespace diffideal
