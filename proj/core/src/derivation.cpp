#include "diffideal/derivation.hpp"

#include "diffideal/error.hpp"
#include "diffideal/gcd.hpp"

namespace diffideal {

DifferentialRing::DifferentialRing(RingPtr ring, DerivationSpec derivation)
    : ring_(std::move(ring)), derivation_(std::move(derivation)) {
  if (derivation_.images.size() != ring_->nsymbols())
    throw RingMismatch("derivation must give exactly one image per symbol");
  for (const auto& img : derivation_.images) require_same_ring(ring_, img.ring(), "derivation image");
}

DifferentialRing DifferentialRing::from_polynomials(RingPtr ring, const std::vector<MultiPoly>& images) {
  DerivationSpec spec;
  spec.images.reserve(images.size());
  for (const auto& p : images) spec.images.emplace_back(p);
  return {std::move(ring), std::move(spec)};
}

bool DifferentialRing::has_polynomial_images() const {
  for (const auto& img : derivation_.images)
    if (!img.is_polynomial()) return false;
  return true;
}

MultiPoly DifferentialRing::polynomial_image(std::size_t symbol) const {
  const auto& img = image(symbol);
  if (!img.is_polynomial())
    throw DomainError("image of " + ring_->name(symbol) +
                      " is not a polynomial; clear denominators by rescaling the derivation");
  return img.num();
}

bool DifferentialRing::is_trivial() const {
  for (const auto& img : derivation_.images)
    if (!img.is_zero()) return false;
  return true;
}

MultiPoly d_poly(const DifferentialRing& ring, const MultiPoly& p) {
  require_same_ring(ring.ring(), p.ring(), "d_poly");
  MultiPoly out(p.ring());
  for (std::size_t s = 0; s < ring.ring()->nsymbols(); ++s) {
    if (!p.involves(s)) continue;
    MultiPoly img = ring.polynomial_image(s);
    if (img.is_zero()) continue;
    out += p.derivative(s) * img;
  }
  return out;
}

RationalFunction d_poly_general(const DifferentialRing& ring, const MultiPoly& p) {
  if (ring.has_polynomial_images()) return d_poly(ring, p);
  require_same_ring(ring.ring(), p.ring(), "d_poly");
  RationalFunction out(p.ring());
  for (std::size_t s = 0; s < ring.ring()->nsymbols(); ++s) {
    if (!p.involves(s) || ring.image(s).is_zero()) continue;
    out = out + RationalFunction(p.derivative(s)) * ring.image(s);
  }
  return out;
}

RationalFunction d_ratfunc(const DifferentialRing& ring, const RationalFunction& r) {
  if (r.is_polynomial())
    return d_poly_general(ring, r.num()) * RationalFunction(MultiPoly::constant(r.ring(), 1 / r.den().constant_value()));
  const MultiPoly& n = r.num();
  const MultiPoly& d = r.den();
  if (ring.has_polynomial_images()) return RationalFunction(d * d_poly(ring, n) - n * d_poly(ring, d), d * d);
  RationalFunction dn = d_poly_general(ring, n), dd = d_poly_general(ring, d);
  MultiPoly top = d * dn.num() * dd.den() - n * dd.num() * dn.den();
  return RationalFunction(top, d * d * dn.den() * dd.den());
}

bool is_constant(const DifferentialRing& ring, const RationalFunction& r) {
  return d_ratfunc(ring, r).is_zero();
}

DifferentialRing rescale_derivation(const DifferentialRing& ring, const RationalFunction& f) {
  require_same_ring(ring.ring(), f.ring(), "rescale_derivation");
  if (f.is_zero()) throw DomainError("rescaling factor must be nonzero");
  if (f.involves_variables())
    throw DomainError("rescaling factor must not involve the main variables");
  DerivationSpec spec;
  for (const auto& img : ring.derivation().images) spec.images.push_back(f * img);
  return {ring.ring(), std::move(spec)};
}

ClearedDerivation clear_denominators(const DifferentialRing& ring) {
  MultiPoly f = MultiPoly::constant(ring.ring(), 1);
  for (const auto& img : ring.derivation().images) {
    if (img.is_polynomial()) continue;
    if (img.den().involves_variables())
      throw DomainError("derivation image has a denominator involving the main variables; "
                        "only parameter denominators can be cleared");
    f = multivariate_lcm(f, img.den());
  }
  RationalFunction factor(f);
  return {rescale_derivation(ring, factor), factor};
}

} // namespace diffideal
