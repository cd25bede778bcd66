#include "diffideal/constants.hpp"

#include "diffideal/differential_ideal.hpp"
#include "diffideal/error.hpp"

#include <algorithm>
#include <map>

namespace diffideal {

MultiPoly CofactorMatrix::column(const RingPtr& ring, std::size_t j) const {
  std::vector<Term> terms;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (matrix(r, j) != 0) terms.push_back({rows[r], matrix(r, j)});
  return MultiPoly::from_terms(ring, std::move(terms));
}

CofactorMatrix cofactor_matrix(const DifferentialRing& ring, std::vector<DarbouxPair> pairs) {
  auto rows = cofactor_space(ring);
  std::map<Monomial, std::size_t> index;
  for (std::size_t r = 0; r < rows.size(); ++r) index.emplace(rows[r], r);
  RationalMatrix m(rows.size(), pairs.size());
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    for (const auto& t : pairs[j].z.terms()) {
      auto it = index.find(t.monomial);
      if (it == index.end()) throw DomainError("cofactor outside the cofactor space");
      m(it->second, j) = t.coeff;
    }
  }
  return {std::move(pairs), std::move(rows), std::move(m)};
}

std::vector<IntegerDependence> integer_dependencies(const CofactorMatrix& m) {
  std::vector<IntegerDependence> out;
  for (const auto& v : nullspace(m.matrix)) out.push_back({primitive_integer_vector(v)});
  return out;
}

CandidateConstant make_candidate_constant(const DifferentialRing& ring, const std::vector<DarbouxPair>& pairs,
                                          const IntegerDependence& dep) {
  if (dep.coefficients.size() != pairs.size()) throw DomainError("dependence length differs from pair count");
  MultiPoly num = MultiPoly::constant(ring.ring(), 1), den = num;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const BigInteger& n = dep.coefficients[i];
    if (n == 0) continue;
    BigInteger magnitude = abs(n);
    if (!magnitude.fits_uint_p()) throw DomainError("exponent too large");
    auto e = static_cast<unsigned>(magnitude.get_ui());
    (n > 0 ? num : den) *= pairs[i].w.pow(e);
  }
  CandidateConstant c{RationalFunction(num, den), dep};
  if (!is_constant(ring, c.value)) throw Error("cofactor dependence did not produce a constant");
  return c;
}

std::vector<CandidateConstant> lattice_constants(const DifferentialRing& ring, const std::vector<DarbouxPair>& pairs) {
  if (pairs.empty()) return {};
  CofactorMatrix m = cofactor_matrix(ring, pairs);
  std::vector<CandidateConstant> out;
  for (const auto& dep : integer_dependencies(m)) {
    CandidateConstant c = make_candidate_constant(ring, m.pairs, dep);
    if (!c.value.is_constant()) out.push_back(std::move(c));
  }
  return out;
}

LatticeResult first_integral_lattice(const DifferentialRing& ring, const SearchConfig& cfg) {
  LatticeResult r;
  r.primes = height_one_differential_primes(ring, cfg);
  if (r.primes.pairs.empty()) return r;
  CofactorMatrix m = cofactor_matrix(ring, r.primes.pairs);
  r.dependencies = integer_dependencies(m);
  for (const auto& dep : r.dependencies) {
    CandidateConstant c = make_candidate_constant(ring, m.pairs, dep);
    if (!c.value.is_constant()) r.constants.push_back(std::move(c));
  }
  return r;
}

std::string to_string(FinitenessVerdict v, std::size_t max_deg) {
  switch (v) {
  case FinitenessVerdict::infinite_family_detected: return "infinite-family-detected";
  case FinitenessVerdict::finitely_many_up_to_degree: return "finitely-many-up-to-degree-" + std::to_string(max_deg);
  case FinitenessVerdict::trivial_derivation: return "trivial-derivation";
  }
  return "?";
}

std::string NewConstantReport::verdict_text() const { return to_string(verdict, max_deg); }

std::string NewConstantReport::constants_text() const {
  if (verdict == FinitenessVerdict::trivial_derivation) return "every element is a constant";
  if (constants.empty()) return "none found up to degree " + std::to_string(max_deg);
  return std::to_string(constants.size()) + " found up to degree " + std::to_string(max_deg);
}

NewConstantReport new_constant_report(const DifferentialRing& ring, const SearchConfig& cfg) {
  NewConstantReport report;
  report.max_deg = cfg.max_deg;
  if (ring.is_trivial()) {
    report.verdict = FinitenessVerdict::trivial_derivation;
    report.completeness = Completeness::representatives_only;
    return report;
  }
  LatticeResult lattice = first_integral_lattice(ring, cfg);
  report.constants = std::move(lattice.constants);
  report.primes = std::move(lattice.primes.pairs);
  report.completeness = lattice.primes.completeness;
  report.verdict = lattice.primes.positive_dimensional_slices > 0 ? FinitenessVerdict::infinite_family_detected
                                                                  : FinitenessVerdict::finitely_many_up_to_degree;
  return report;
}

bool ConstantFamilyReport::all_verified() const {
  return std::all_of(members.begin(), members.end(),
                     [](const FamilyMember& m) { return m.proper && m.differential && m.distinct; });
}

ConstantFamilyReport constant_family(const DifferentialRing& ring, const MultiPoly& f, const MultiPoly& g,
                                     const std::vector<BigRational>& cs) {
  require_same_ring(ring.ring(), f.ring(), "constant_family");
  require_same_ring(ring.ring(), g.ring(), "constant_family");
  if (g.is_zero()) throw PreconditionError("constant_family: denominator must be nonzero");
  RationalFunction constant(f, g);
  if (!is_constant(ring, constant))
    throw PreconditionError("constant_family: f/g is not a constant of the derivation");
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (cs[i] == cs[j]) throw PreconditionError("constant_family: sample values must be distinct");

  ConstantFamilyReport report{constant, {}};
  const RingPtr& R = ring.ring();
  for (const auto& c : cs) {
    FamilyMember m{c, f - g * c};
    Ideal ideal(R, {m.generator});
    m.proper = !ideal_membership(MultiPoly::constant(R, 1), ideal);
    m.differential = is_differential_ideal(ring, ideal);
    report.members.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < report.members.size(); ++i) {
    bool distinct = true;
    for (std::size_t j = 0; j < report.members.size() && distinct; ++j)
      if (i != j && associated(report.members[i].generator, report.members[j].generator)) distinct = false;
    report.members[i].distinct = distinct;
  }
  return report;
}

LocalizationWitness localization_witness(const DifferentialRing& ring, std::vector<DarbouxPair> primes,
                                         bool primes_complete) {
  const RingPtr& R = ring.ring();
  if (R->nvariables() == 0) throw PreconditionError("localization_witness: ring has no main variables");
  MultiPoly dx1 = ring.polynomial_image(0);
  if (dx1.is_zero()) throw PreconditionError("localization_witness: D(" + R->name(0) + ") = 0");
  LocalizationWitness out{MultiPoly::constant(R, 1), MultiPoly(R), std::move(primes), {}, !primes_complete};
  for (const auto& p : out.primes) out.t *= p.w;
  out.witness = out.t * dx1;
  for (const auto& p : out.primes) out.coverage.push_back(ideal_membership(out.witness, Ideal(R, {p.w})));
  return out;
}

LocalizationWitness localization_witness(const DifferentialRing& ring, const SearchConfig& cfg) {
  const RingPtr& R = ring.ring();
  if (R->nvariables() == 0) throw PreconditionError("localization_witness: ring has no main variables");
  if (ring.polynomial_image(0).is_zero())
    throw PreconditionError("localization_witness: D(" + R->name(0) + ") = 0");
  auto primes = height_one_differential_primes(ring, cfg);
  bool complete = primes.completeness == Completeness::complete_for_rational_coefficients;
  return localization_witness(ring, std::move(primes.pairs), complete);
}

} // namespace diffideal
