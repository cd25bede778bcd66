#pragma once

#include "diffideal/rational.hpp"
#include "diffideal/ring.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace diffideal {

struct Term {
  Monomial monomial;
  BigRational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q in the symbols of a Ring.
///
/// Terms are kept sorted in decreasing ring order with no zero coefficients,
/// so two polynomials are equal iff their term lists are identical.
class MultiPoly {
public:
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  /// Sorts, merges equal monomials and drops zeros.
  static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);
  static MultiPoly constant(RingPtr ring, const BigRational& c);
  static MultiPoly symbol(RingPtr ring, std::size_t s);
  static MultiPoly monomial(RingPtr ring, Monomial m, const BigRational& c = 1);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  /// True for elements of Q (including zero).
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  BigRational constant_value() const;
  bool is_one() const;

  /// Leading data under the ring order; the polynomial must be nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const BigRational& leading_coefficient() const { return terms_.front().coeff; }

  /// Total degree; -1 for the zero polynomial.
  std::int64_t degree() const;
  std::int64_t degree_in(std::size_t symbol) const;
  /// Total degree counting only the ring's main variables; -1 for zero.
  std::int64_t degree_in_variables() const;
  bool involves(std::size_t symbol) const { return degree_in(symbol) > 0; }
  bool involves_variables() const { return degree_in_variables() > 0; }

  BigRational coefficient(const Monomial& m) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const BigRational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigRational& c) { return a *= c; }
  friend MultiPoly operator*(const BigRational& c, MultiPoly a) { return a *= c; }

  MultiPoly pow(unsigned n) const;
  MultiPoly mul_term(const Monomial& m, const BigRational& c) const;

  /// Partial derivative with respect to a ring symbol.
  MultiPoly derivative(std::size_t symbol) const;
  /// Replaces `symbol` by the rational `value`.
  MultiPoly substitute(std::size_t symbol, const BigRational& value) const;
  /// Replaces `symbol` by a polynomial of the same ring.
  MultiPoly compose(std::size_t symbol, const MultiPoly& value) const;
  BigRational evaluate(std::span<const BigRational> point) const;

  /// Positive rational c such that this/c has coprime integer coefficients.
  BigRational content() const;
  /// Integer-primitive associate with positive leading coefficient.
  MultiPoly primitive_part() const;
  /// Associate with leading coefficient 1.
  MultiPoly monic() const;

  /// Re-expresses the polynomial in another ring whose symbol names include
  /// every symbol this polynomial mentions.
  MultiPoly rebase(const RingPtr& target) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
  MultiPoly(RingPtr ring, std::vector<Term> sorted) : ring_(std::move(ring)), terms_(std::move(sorted)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Returns q with a = q*b when b divides a, nothing otherwise.
/// Throws DivisionByZero when b = 0 and RingMismatch for foreign operands.
std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);

/// Same as exact_divide, but throws DomainError when the division is not exact.
MultiPoly divide_or_throw(const MultiPoly& a, const MultiPoly& b);

/// True iff a = c*b for a nonzero rational c.
bool associated(const MultiPoly& a, const MultiPoly& b);

} // namespace diffideal
