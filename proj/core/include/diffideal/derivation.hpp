#pragma once

#include "diffideal/poly.hpp"
#include "diffideal/ratfunc.hpp"

#include <vector>

namespace diffideal {

/// Images D(s) of every ring symbol, indexed like the ring's symbols.
struct DerivationSpec {
  std::vector<RationalFunction> images;
};

/// A polynomial ring Q[variables, parameters] together with a derivation.
///
/// Images may be rational functions (as produced by rescaling with a factor
/// that has a denominator); polynomial-only operations check
/// has_polynomial_images() and throw DomainError otherwise.
class DifferentialRing {
public:
  /// Throws RingMismatch unless there is exactly one image per symbol, all in `ring`.
  DifferentialRing(RingPtr ring, DerivationSpec derivation);
  static DifferentialRing from_polynomials(RingPtr ring, const std::vector<MultiPoly>& images);

  const RingPtr& ring() const { return ring_; }
  const DerivationSpec& derivation() const { return derivation_; }
  const RationalFunction& image(std::size_t symbol) const { return derivation_.images[symbol]; }

  bool has_polynomial_images() const;
  /// Throws DomainError when the image is not a polynomial.
  MultiPoly polynomial_image(std::size_t symbol) const;
  /// D = 0 on every symbol.
  bool is_trivial() const;

private:
  RingPtr ring_;
  DerivationSpec derivation_;
};

/// D(p) = sum over symbols s of (dp/ds) * D(s). Requires polynomial images.
MultiPoly d_poly(const DifferentialRing& ring, const MultiPoly& p);
/// D(p) for arbitrary (possibly rational) images.
RationalFunction d_poly_general(const DifferentialRing& ring, const MultiPoly& p);
/// Quotient rule, result in canonical form.
RationalFunction d_ratfunc(const DifferentialRing& ring, const RationalFunction& r);
bool is_constant(const DifferentialRing& ring, const RationalFunction& r);

/// Derivation f*D. The factor must be nonzero (DomainError) and free of the
/// main variables (DomainError), i.e. an element of the parameter field.
DifferentialRing rescale_derivation(const DifferentialRing& ring, const RationalFunction& f);

struct ClearedDerivation {
  DifferentialRing ring;
  /// The factor f with new D = f * old D; 1 when nothing needed clearing.
  RationalFunction factor;
};

/// Multiplies D by the lcm of the image denominators so that every image is
/// a polynomial. Denominators must involve parameters only (DomainError).
ClearedDerivation clear_denominators(const DifferentialRing& ring);

} // namespace diffideal
