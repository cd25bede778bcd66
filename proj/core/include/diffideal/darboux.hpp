#pragma once

#include "diffideal/derivation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace diffideal {

/// w with D(w) = z*w. w is integer-primitive with positive leading
/// coefficient and involves at least one main variable.
struct DarbouxPair {
  MultiPoly w;
  MultiPoly z;
};

struct SearchConfig {
  std::size_t max_deg = 1;
  bool include_constant_cofactor_zero = false;
};

enum class Completeness {
  /// Every slice was zero-dimensional: all Darboux polynomials with rational
  /// coefficients up to the degree bound are represented.
  complete_for_rational_coefficients,
  /// Some slice carried a positive-dimensional family; only representatives
  /// of it are reported.
  representatives_only,
};

std::string to_string(Completeness c);

struct DarbouxSearchResult {
  std::vector<DarbouxPair> pairs;
  Completeness completeness = Completeness::complete_for_rational_coefficients;
  std::size_t slices = 0;
  std::size_t positive_dimensional_slices = 0;
  /// Slice solutions over the algebraic closure that are not rational.
  std::size_t non_rational_solutions = 0;
};

/// M = max total degree of the symbol images; 0 for the trivial derivation.
std::size_t cofactor_degree_bound(const DifferentialRing& ring);

/// Monomials of degree <= max(0, M - 1), decreasing in the ring order. Every
/// cofactor lies in their span.
std::vector<Monomial> cofactor_space(const DifferentialRing& ring);

/// z = D(w)/w when the division is exact (z = 0 is accepted).
/// Throws DomainError when w = 0.
std::optional<MultiPoly> verify_darboux(const DifferentialRing& ring, const MultiPoly& w);

/// Undetermined-coefficient search for Darboux polynomials of degree
/// <= cfg.max_deg. The bilinear system D(w) - z*w = 0 is solved slice by
/// slice: for each candidate leading monomial m of w, a_m = 1 and all larger
/// coefficients vanish, so each scalar class of w appears once. Positive-
/// dimensional slices contribute corner representatives (free unknowns at 0,
/// then each free unknown at 1 in turn). Pairs divisible by a lower-degree
/// pair are dropped, and within one cofactor only a linearly independent
/// subset is kept, preferring sparse w. Output sorted by degree, then by the
/// terms of w and z in decreasing ring order.
DarbouxSearchResult darboux_search(const DifferentialRing& ring, const SearchConfig& cfg);

/// Search restricted to nonzero cofactors. In a polynomial ring these w
/// generate the height-one prime differential ideals not generated by
/// constants (irreducibility is approximated by the divisibility filter).
DarbouxSearchResult height_one_differential_primes(const DifferentialRing& ring, SearchConfig cfg);

} // namespace diffideal
