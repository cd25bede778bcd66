#pragma once

#include "diffideal/order.hpp"
#include "diffideal/poly.hpp"

#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace diffideal {

/// Reduced Groebner basis: monic under `order`, no leading monomial divides
/// another, sorted by increasing leading monomial.
struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order;
  std::vector<MultiPoly> polys;

  bool is_unit() const { return polys.size() == 1 && polys[0].is_one(); }
  bool is_zero() const { return polys.empty(); }
  std::vector<Monomial> leading_monomials() const;
  /// Finitely many standard monomials: every symbol has a pure power among
  /// the leading monomials (the unit ideal counts as zero-dimensional).
  bool is_zero_dimensional() const;
  /// Standard monomials; throws DimensionError when infinitely many.
  std::vector<Monomial> standard_monomials() const;
};

class Ideal;

/// Ideal of Q[symbols] given by generators. Zero generators are dropped and
/// duplicates removed; an empty generator list is the zero ideal. The
/// ring-order Groebner basis is computed at most once and shared between
/// copies.
class Ideal {
public:
  Ideal(RingPtr ring, std::vector<MultiPoly> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

  /// Groebner basis under the ring order.
  const GroebnerBasis& groebner() const;

  Ideal with(std::vector<MultiPoly> extra) const;

private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<GroebnerBasis> basis;
  };

  RingPtr ring_;
  std::vector<MultiPoly> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Leading monomial / coefficient of a nonzero polynomial under `order`.
const Term& leading_term(const MultiPoly& p, const MonomialOrder& order);

/// Buchberger's algorithm with Gebauer-Moeller pair pruning, the normal
/// selection strategy and fraction-free integer reduction. Deterministic.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order);
GroebnerBasis buchberger(const std::vector<MultiPoly>& generators, const MonomialOrder& order);

/// Fully reduced remainder of p modulo G; zero iff p lies in the ideal.
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& basis);

bool ideal_membership(const MultiPoly& p, const Ideal& ideal);

/// Membership in the extension of the ideal to F[variables] with F the field
/// of rational functions in the parameters, i.e. whether u*p lies in the
/// ideal for some nonzero parameter polynomial u. Coincides with
/// ideal_membership when the ring has no parameters.
bool member_over_parameter_field(const MultiPoly& p, const Ideal& ideal);

/// Generators of the ideal intersected with Q[keep], from a lex basis that
/// ranks the eliminated symbols first.
Ideal elimination_ideal(const Ideal& ideal, std::span<const std::size_t> keep);

struct RationalSolutions {
  /// Points with every coordinate in Q, one value per ring symbol, sorted.
  std::vector<std::vector<BigRational>> points;
  /// Distinct solutions over the algebraic closure that are not rational.
  std::size_t non_rational_count = 0;
};

/// All rational points of a zero-dimensional ideal (DimensionError otherwise).
RationalSolutions solve_zero_dim_rational(const Ideal& ideal);

} // namespace diffideal
