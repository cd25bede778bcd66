#pragma once

#include "diffideal/poly.hpp"

#include <random>

namespace diffideal::testing {

struct RandomPolySpec {
  std::size_t max_degree = 4;
  std::size_t max_terms = 5;
  int coeff_bound = 10; // numerators and denominators in [-bound, bound]
  bool rational_coeffs = false;
};

MultiPoly random_poly(const RingPtr& ring, std::mt19937_64& rng, const RandomPolySpec& spec);
MultiPoly random_nonzero_poly(const RingPtr& ring, std::mt19937_64& rng, const RandomPolySpec& spec);
/// Polynomial in the ring's parameters only (nonzero).
MultiPoly random_parameter_poly(const RingPtr& ring, std::mt19937_64& rng, std::size_t max_degree);

} // namespace diffideal::testing
