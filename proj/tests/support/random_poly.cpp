#include "support/random_poly.hpp"

namespace diffideal::testing {

namespace {

Monomial random_monomial(const RingPtr& ring, std::mt19937_64& rng, std::size_t first, std::size_t last,
                         std::size_t max_degree) {
  Monomial m = ring->one();
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::size_t budget = deg(rng);
  if (last == first) return m;
  std::uniform_int_distribution<std::size_t> pick(first, last - 1);
  for (std::size_t k = 0; k < budget; ++k) {
    std::size_t s = pick(rng);
    m.set(s, m[s] + 1);
  }
  return m;
}

BigRational random_coeff(std::mt19937_64& rng, const RandomPolySpec& spec) {
  std::uniform_int_distribution<int> num(-spec.coeff_bound, spec.coeff_bound);
  std::uniform_int_distribution<int> den(1, spec.coeff_bound);
  return spec.rational_coeffs ? make_rational(num(rng), den(rng)) : BigRational(num(rng));
}

} // namespace

MultiPoly random_poly(const RingPtr& ring, std::mt19937_64& rng, const RandomPolySpec& spec) {
  std::uniform_int_distribution<std::size_t> nterms(0, spec.max_terms);
  std::vector<Term> terms;
  for (std::size_t k = nterms(rng); k > 0; --k)
    terms.push_back({random_monomial(ring, rng, 0, ring->nsymbols(), spec.max_degree), random_coeff(rng, spec)});
  return MultiPoly::from_terms(ring, std::move(terms));
}

MultiPoly random_nonzero_poly(const RingPtr& ring, std::mt19937_64& rng, const RandomPolySpec& spec) {
  for (;;) {
    MultiPoly p = random_poly(ring, rng, spec);
    if (!p.is_zero()) return p;
  }
}

MultiPoly random_parameter_poly(const RingPtr& ring, std::mt19937_64& rng, std::size_t max_degree) {
  RandomPolySpec spec{max_degree, 3, 5, false};
  for (;;) {
    std::vector<Term> terms;
    std::uniform_int_distribution<std::size_t> nterms(1, spec.max_terms);
    for (std::size_t k = nterms(rng); k > 0; --k)
      terms.push_back({random_monomial(ring, rng, ring->nvariables(), ring->nsymbols(), max_degree),
                       random_coeff(rng, spec)});
    MultiPoly p = MultiPoly::from_terms(ring, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

} // namespace diffideal::testing
