#pragma once

#include "diffideal/derivation.hpp"
#include "diffideal/groebner.hpp"

#include <cstddef>

namespace diffideal {

/// D(g) lies in the ideal for every generator g (sufficient by the Leibniz
/// rule). Membership is taken over the parameter field: parameter
/// polynomials are units, so the verdict is unchanged when D is rescaled by
/// any nonzero element of that field. Rational images are accepted as long
/// as their denominators involve parameters only.
bool is_differential_ideal(const DifferentialRing& ring, const Ideal& ideal);

/// Smallest differential ideal containing `ideal`: generators' derivatives
/// are added until nothing new appears. Throws IterationLimit after
/// `max_rounds` rounds.
Ideal differential_closure(const DifferentialRing& ring, const Ideal& ideal, std::size_t max_rounds = 64);

} // namespace diffideal
