#include "diffideal/darboux.hpp"

#include "diffideal/error.hpp"
#include "diffideal/groebner.hpp"
#include "diffideal/linalg.hpp"

#include <algorithm>
#include <map>

namespace diffideal {

std::string to_string(Completeness c) {
  switch (c) {
  case Completeness::complete_for_rational_coefficients: return "complete-for-rational-coefficients";
  case Completeness::representatives_only: return "representatives-only";
  }
  return "?";
}

std::size_t cofactor_degree_bound(const DifferentialRing& ring) {
  std::int64_t m = 0;
  for (std::size_t s = 0; s < ring.ring()->nsymbols(); ++s)
    m = std::max(m, ring.polynomial_image(s).degree());
  return static_cast<std::size_t>(m);
}

namespace {

std::vector<Monomial> sorted_desc(const Ring& ring, std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) { return ring.order().greater(a, b); });
  return ms;
}

} // namespace

std::vector<Monomial> cofactor_space(const DifferentialRing& ring) {
  std::size_t m = cofactor_degree_bound(ring);
  return sorted_desc(*ring.ring(), monomials_up_to(ring.ring()->nsymbols(), m == 0 ? 0 : m - 1));
}

std::optional<MultiPoly> verify_darboux(const DifferentialRing& ring, const MultiPoly& w) {
  if (w.is_zero()) throw DomainError("verify_darboux: w must be nonzero");
  return exact_divide(d_poly(ring, w), w);
}

namespace {

struct SliceSolution {
  std::vector<std::vector<BigRational>> points;
  bool positive_dimensional = false;
  std::size_t non_rational = 0;
};

constexpr std::size_t kMaxFamilyDepth = 4;

// Rational points of the system, with corner representatives for
// positive-dimensional components.
SliceSolution solve_system(const RingPtr& unknowns, std::vector<MultiPoly> equations, std::size_t depth) {
  SliceSolution out;
  Ideal ideal(unknowns, std::move(equations));
  const GroebnerBasis& basis = ideal.groebner();
  if (basis.is_unit()) return out;
  if (basis.is_zero_dimensional()) {
    auto sol = solve_zero_dim_rational(ideal);
    out.points = std::move(sol.points);
    out.non_rational = sol.non_rational_count;
    return out;
  }

  out.positive_dimensional = true;
  if (depth >= kMaxFamilyDepth) return out;

  // Greedily pick free unknowns until fixing them at 0 leaves finitely many
  // solutions.
  std::vector<std::size_t> free;
  Ideal corner = ideal;
  for (;;) {
    const GroebnerBasis& gb = corner.groebner();
    if (gb.is_zero_dimensional()) break;
    auto lms = gb.leading_monomials();
    std::size_t pick = unknowns->nsymbols();
    for (std::size_t s = 0; s < unknowns->nsymbols() && pick == unknowns->nsymbols(); ++s) {
      bool pure = std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) { return m[s] > 0 && m[s] == m.degree(); });
      if (!pure) pick = s;
    }
    free.push_back(pick);
    corner = corner.with({MultiPoly::symbol(unknowns, pick)});
  }

  auto absorb = [&](SliceSolution&& sub) {
    for (auto& p : sub.points) out.points.push_back(std::move(p));
    out.non_rational += sub.non_rational;
  };
  absorb(solve_system(unknowns, corner.generators(), depth + 1));
  for (std::size_t s : free) {
    std::vector<MultiPoly> eqs = ideal.generators();
    for (std::size_t u : free) {
      MultiPoly x = MultiPoly::symbol(unknowns, u);
      eqs.push_back(u == s ? x - MultiPoly::constant(unknowns, 1) : x);
    }
    absorb(solve_system(unknowns, std::move(eqs), depth + 1));
  }
  return out;
}

bool is_in_span(const std::vector<const MultiPoly*>& basis, const MultiPoly& v) {
  if (basis.empty()) return v.is_zero();
  std::map<Monomial, std::size_t> rows;
  auto index = [&](const MultiPoly& p) {
    for (const auto& t : p.terms()) rows.try_emplace(t.monomial, rows.size());
  };
  for (const auto* b : basis) index(*b);
  index(v);
  RationalMatrix m(rows.size(), basis.size() + 1);
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (const auto& t : basis[c]->terms()) m(rows[t.monomial], c) = t.coeff;
  for (const auto& t : v.terms()) m(rows[t.monomial], basis.size()) = t.coeff;
  auto e = row_reduce(std::move(m));
  return e.pivot_columns.empty() || e.pivot_columns.back() != basis.size();
}

// Output order: degree, then decreasing ring order of the term lists.
bool pair_less(const Ring& ring, const DarbouxPair& a, const DarbouxPair& b) {
  if (a.w.degree() != b.w.degree()) return a.w.degree() < b.w.degree();
  auto ta = a.w.terms(), tb = b.w.terms();
  for (std::size_t k = 0; k < std::min(ta.size(), tb.size()); ++k) {
    if (int c = ring.order().compare(ta[k].monomial, tb[k].monomial); c != 0) return c > 0;
    if (ta[k].coeff != tb[k].coeff) return ta[k].coeff < tb[k].coeff;
  }
  return ta.size() < tb.size();
}

// Preference when thinning a family: sparser representatives first.
bool simpler(const Ring& ring, const DarbouxPair& a, const DarbouxPair& b) {
  if (a.w.degree() != b.w.degree()) return a.w.degree() < b.w.degree();
  if (a.w.size() != b.w.size()) return a.w.size() < b.w.size();
  return pair_less(ring, a, b);
}

} // namespace

DarbouxSearchResult darboux_search(const DifferentialRing& ring, const SearchConfig& cfg) {
  if (cfg.max_deg < 1) throw DomainError("max_deg must be at least 1");
  const RingPtr& R = ring.ring();
  const std::size_t n = R->nsymbols();
  auto w_monomials = sorted_desc(*R, monomials_up_to(n, cfg.max_deg));
  auto z_monomials = cofactor_space(ring);

  std::vector<MultiPoly> d_of;
  d_of.reserve(w_monomials.size());
  for (const auto& m : w_monomials) d_of.push_back(d_poly(ring, MultiPoly::monomial(R, m)));

  DarbouxSearchResult result;
  std::vector<DarbouxPair> found;

  for (std::size_t lead = 0; lead < w_monomials.size(); ++lead) {
    if (w_monomials[lead].is_one()) continue;
    ++result.slices;

    // Unknowns: coefficients of the monomials below the leading one, then
    // the cofactor coefficients.
    std::vector<std::string> names;
    const std::size_t lower = w_monomials.size() - lead - 1;
    for (std::size_t k = 0; k < lower; ++k) names.push_back("a" + std::to_string(k));
    for (std::size_t j = 0; j < z_monomials.size(); ++j) names.push_back("b" + std::to_string(j));
    RingPtr U = Ring::make(names);
    auto a_of = [&](std::size_t k) { return MultiPoly::symbol(U, k); };
    auto b_of = [&](std::size_t j) { return MultiPoly::symbol(U, lower + j); };

    // Coefficient of each ring monomial in D(w) - z*w.
    std::map<Monomial, MultiPoly> eq;
    auto add = [&](const Monomial& mu, const MultiPoly& c) {
      auto it = eq.try_emplace(mu, MultiPoly(U)).first;
      it->second += c;
    };
    auto one = MultiPoly::constant(U, 1);
    for (const auto& t : d_of[lead].terms()) add(t.monomial, one * t.coeff);
    for (std::size_t k = 0; k < lower; ++k)
      for (const auto& t : d_of[lead + 1 + k].terms()) add(t.monomial, a_of(k) * t.coeff);
    for (std::size_t j = 0; j < z_monomials.size(); ++j) {
      add(z_monomials[j] * w_monomials[lead], -b_of(j));
      for (std::size_t k = 0; k < lower; ++k) add(z_monomials[j] * w_monomials[lead + 1 + k], -(b_of(j) * a_of(k)));
    }
    std::vector<MultiPoly> equations;
    for (auto& [mu, c] : eq)
      if (!c.is_zero()) equations.push_back(std::move(c));

    SliceSolution sol = solve_system(U, std::move(equations), 0);
    if (sol.positive_dimensional) ++result.positive_dimensional_slices;
    result.non_rational_solutions += sol.non_rational;

    for (const auto& point : sol.points) {
      std::vector<Term> wt{{w_monomials[lead], 1}}, zt;
      for (std::size_t k = 0; k < lower; ++k) wt.push_back({w_monomials[lead + 1 + k], point[k]});
      for (std::size_t j = 0; j < z_monomials.size(); ++j) zt.push_back({z_monomials[j], point[lower + j]});
      MultiPoly w = MultiPoly::from_terms(R, std::move(wt)).primitive_part();
      MultiPoly z = MultiPoly::from_terms(R, std::move(zt));
      if (d_poly(ring, w) != z * w) throw Error("darboux_search produced an unverified pair");
      if (!w.involves_variables()) continue;
      if (z.is_zero() && !cfg.include_constant_cofactor_zero) continue;
      found.push_back({std::move(w), std::move(z)});
    }
  }

  std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) { return simpler(*R, a, b); });
  found.erase(std::unique(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.w == b.w; }),
              found.end());

  // Drop pairs divisible by a lower-degree pair (their cofactor is the sum of
  // the factors' cofactors), then keep an independent subset per cofactor.
  std::vector<DarbouxPair> kept;
  for (const auto& p : found) {
    bool divisible = std::any_of(found.begin(), found.end(), [&](const DarbouxPair& q) {
      return q.w.degree() < p.w.degree() && !q.w.is_constant() && exact_divide(p.w, q.w).has_value();
    });
    if (divisible) continue;
    std::vector<const MultiPoly*> same;
    for (const auto& q : kept)
      if (q.z == p.z) same.push_back(&q.w);
    if (!same.empty() && is_in_span(same, p.w)) continue;
    kept.push_back(p);
  }
  std::sort(kept.begin(), kept.end(), [&](const auto& a, const auto& b) { return pair_less(*R, a, b); });
  result.pairs = std::move(kept);
  if (result.positive_dimensional_slices > 0) result.completeness = Completeness::representatives_only;
  return result;
}

DarbouxSearchResult height_one_differential_primes(const DifferentialRing& ring, SearchConfig cfg) {
  cfg.include_constant_cofactor_zero = false;
  return darboux_search(ring, cfg);
}

} // namespace diffideal
