#pragma once

#include "diffideal/darboux.hpp"
#include "diffideal/groebner.hpp"
#include "diffideal/linalg.hpp"

#include <string>
#include <vector>

namespace diffideal {

/// Cofactors of a list of Darboux pairs as columns over the cofactor-space
/// monomials.
struct CofactorMatrix {
  std::vector<DarbouxPair> pairs;
  std::vector<Monomial> rows;
  RationalMatrix matrix;

  /// Reassembles the cofactor of column j from the matrix entries.
  MultiPoly column(const RingPtr& ring, std::size_t j) const;
};

/// Throws DomainError if some cofactor leaves the cofactor space.
CofactorMatrix cofactor_matrix(const DifferentialRing& ring, std::vector<DarbouxPair> pairs);

/// Primitive integer vector n with sum n_i z_i = 0; first nonzero entry positive.
struct IntegerDependence {
  std::vector<BigInteger> coefficients;
};

/// Integer basis of the rational kernel of the cofactor matrix.
std::vector<IntegerDependence> integer_dependencies(const CofactorMatrix& m);

/// prod w_i^{n_i}, verified to satisfy D = 0 at construction.
struct CandidateConstant {
  RationalFunction value;
  IntegerDependence dependence;
};

/// Builds prod w_i^{n_i}; throws Error if the result is not a constant.
CandidateConstant make_candidate_constant(const DifferentialRing& ring, const std::vector<DarbouxPair>& pairs,
                                          const IntegerDependence& dep);

/// Constants from the integer dependencies among the cofactors of `pairs`,
/// excluding elements of Q.
std::vector<CandidateConstant> lattice_constants(const DifferentialRing& ring, const std::vector<DarbouxPair>& pairs);

struct LatticeResult {
  DarbouxSearchResult primes;
  std::vector<IntegerDependence> dependencies;
  std::vector<CandidateConstant> constants;
};

/// Height-one search followed by the cofactor-lattice construction.
LatticeResult first_integral_lattice(const DifferentialRing& ring, const SearchConfig& cfg);

enum class FinitenessVerdict { infinite_family_detected, finitely_many_up_to_degree, trivial_derivation };

struct NewConstantReport {
  std::vector<CandidateConstant> constants;
  std::vector<DarbouxPair> primes;
  Completeness completeness = Completeness::complete_for_rational_coefficients;
  FinitenessVerdict verdict = FinitenessVerdict::finitely_many_up_to_degree;
  std::size_t max_deg = 0;

  /// "infinite-family-detected", "finitely-many-up-to-degree-<d>" or
  /// "trivial-derivation".
  std::string verdict_text() const;
  /// "none found up to degree <d>" or a count of constants found.
  std::string constants_text() const;
};

/// Evidence-grade report on new constants: never claims their absence, only
/// that none were found up to the degree bound.
NewConstantReport new_constant_report(const DifferentialRing& ring, const SearchConfig& cfg);

struct FamilyMember {
  BigRational c;
  MultiPoly generator; // f - c*g
  bool proper = false;
  bool differential = false;
  bool distinct = false;
};

struct ConstantFamilyReport {
  RationalFunction constant;
  std::vector<FamilyMember> members;

  bool all_verified() const;
};

/// The ideals (f - c*g) for a constant f/g: checks properness, whether each
/// is a differential ideal, and pairwise distinctness (non-associate
/// generators). Throws PreconditionError if g = 0, f/g is not a constant or
/// the sample values repeat.
ConstantFamilyReport constant_family(const DifferentialRing& ring, const MultiPoly& f, const MultiPoly& g,
                                     const std::vector<BigRational>& cs);

struct LocalizationWitness {
  /// Product of the height-one Darboux generators (1 when there are none).
  MultiPoly t;
  /// t * D(X_1), with X_1 the first main variable.
  MultiPoly witness;
  std::vector<DarbouxPair> primes;
  /// coverage[i]: witness lies in (w_i).
  std::vector<bool> coverage;
  /// Set when the prime list may be incomplete.
  bool heuristic = false;
};

/// Throws PreconditionError when D(X_1) = 0 or the ring has no variables.
LocalizationWitness localization_witness(const DifferentialRing& ring, const SearchConfig& cfg);
LocalizationWitness localization_witness(const DifferentialRing& ring, std::vector<DarbouxPair> primes,
                                         bool primes_complete);

std::string to_string(FinitenessVerdict v, std::size_t max_deg);

} // namespace diffideal
