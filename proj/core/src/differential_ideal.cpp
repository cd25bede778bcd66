#include "diffideal/differential_ideal.hpp"

#include "diffideal/error.hpp"

#include <string>

namespace diffideal {

namespace {

// Numerator of D(g) after clearing a parameter-only denominator, which is a
// unit over the parameter field.
MultiPoly cleared_derivative(const DifferentialRing& ring, const MultiPoly& g) {
  RationalFunction d = d_poly_general(ring, g);
  if (d.den().involves_variables())
    throw DomainError("derivative has a denominator involving the main variables");
  return d.num();
}

} // namespace

bool is_differential_ideal(const DifferentialRing& ring, const Ideal& ideal) {
  require_same_ring(ring.ring(), ideal.ring(), "is_differential_ideal");
  for (const auto& g : ideal.generators())
    if (!member_over_parameter_field(cleared_derivative(ring, g), ideal)) return false;
  return true;
}

Ideal differential_closure(const DifferentialRing& ring, const Ideal& ideal, std::size_t max_rounds) {
  require_same_ring(ring.ring(), ideal.ring(), "differential_closure");
  Ideal current = ideal;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    std::vector<MultiPoly> fresh;
    for (const auto& g : current.generators()) {
      MultiPoly d = cleared_derivative(ring, g);
      if (!member_over_parameter_field(d, current)) fresh.push_back(d.primitive_part());
    }
    if (fresh.empty()) return current;
    current = current.with(std::move(fresh));
  }
  throw IterationLimit("differential_closure exceeded " + std::to_string(max_rounds) +
                       " rounds; this indicates an internal inconsistency");
}

} // namespace diffideal
