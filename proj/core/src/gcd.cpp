#include "diffideal/gcd.hpp"

#include "diffideal/error.hpp"

#include <span>

namespace diffideal {

std::map<Monomial::Exponent, MultiPoly> coefficients_in(const MultiPoly& p, std::size_t symbol) {
  std::map<Monomial::Exponent, std::vector<Term>> buckets;
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    m.set(symbol, 0);
    buckets[t.monomial[symbol]].push_back({std::move(m), t.coeff});
  }
  std::map<Monomial::Exponent, MultiPoly> out;
  for (auto& [e, terms] : buckets) out.emplace(e, MultiPoly::from_terms(p.ring(), std::move(terms)));
  return out;
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t symbol) {
  auto db = b.degree_in(symbol);
  if (db < 0) throw DivisionByZero("pseudo_remainder by zero");
  MultiPoly lc_b = coefficients_in(b, symbol).rbegin()->second;
  MultiPoly r = a;
  for (auto dr = r.degree_in(symbol); dr >= db && !r.is_zero(); dr = r.degree_in(symbol)) {
    MultiPoly lc_r = coefficients_in(r, symbol).rbegin()->second;
    auto shift = static_cast<Monomial::Exponent>(dr - db);
    r = lc_b * r - (lc_r * b).mul_term(r.ring()->symbol(symbol, shift), 1);
  }
  return r;
}

namespace {

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b);

using Dense = std::vector<BigRational>; // index = exponent

void trim(Dense& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

// Image of p in Q[x] after substituting `point` for every other symbol.
Dense specialize(const MultiPoly& p, std::size_t x, std::span<const BigInteger> point) {
  Dense u(static_cast<std::size_t>(p.degree_in(x)) + 1);
  BigInteger pw;
  for (const auto& t : p.terms()) {
    BigRational c = t.coeff;
    for (std::size_t s = 0; s < point.size(); ++s) {
      if (s == x || t.monomial[s] == 0) continue;
      mpz_pow_ui(pw.get_mpz_t(), point[s].get_mpz_t(), t.monomial[s]);
      c *= pw;
    }
    u[t.monomial[x]] += c;
  }
  trim(u);
  return u;
}

std::size_t univariate_gcd_degree(Dense a, Dense b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // a <- a mod b
    while (a.size() >= b.size()) {
      BigRational f = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// True when gcd(a, b) certainly does not involve x: the univariate images at
// a point keeping both leading coefficients nonzero are coprime. (The image
// of the true gcd divides the image gcd and keeps its degree in x.)
bool coprime_in(const MultiPoly& a, const MultiPoly& b, std::size_t x) {
  const std::size_t n = a.ring()->nsymbols();
  const auto da = static_cast<std::size_t>(a.degree_in(x)), db = static_cast<std::size_t>(b.degree_in(x));
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<BigInteger> point(n);
    for (std::size_t s = 0; s < n; ++s) point[s] = BigInteger(static_cast<long>(2 + 3 * s + 7 * attempt));
    Dense ua = specialize(a, x, point), ub = specialize(b, x, point);
    if (ua.size() != da + 1 || ub.size() != db + 1) continue;
    return univariate_gcd_degree(std::move(ua), std::move(ub)) == 0;
  }
  return false;
}

// gcd of all coefficients of p in `symbol`, optionally folded with `seed`.
MultiPoly content_in(const MultiPoly& p, std::size_t symbol, std::optional<MultiPoly> seed = {}) {
  MultiPoly g = seed ? *seed : MultiPoly(p.ring());
  for (const auto& [e, c] : coefficients_in(p, symbol)) {
    g = g.is_zero() ? c.primitive_part() : gcd_impl(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MultiPoly leading_coefficient_in(const MultiPoly& p, std::size_t x) {
  return coefficients_in(p, x).rbegin()->second;
}

// lc(b)^(deg a - deg b + 1) * a mod b, the exact pseudo-remainder.
MultiPoly exact_prem(const MultiPoly& a, const MultiPoly& b, std::size_t x) {
  const auto da = a.degree_in(x), db = b.degree_in(x);
  MultiPoly lc = leading_coefficient_in(b, x);
  MultiPoly r = a;
  std::int64_t steps = 0;
  for (auto dr = r.degree_in(x); dr >= db && !r.is_zero(); dr = r.degree_in(x)) {
    MultiPoly lc_r = leading_coefficient_in(r, x);
    r = lc * r - (lc_r * b).mul_term(r.ring()->symbol(x, static_cast<Monomial::Exponent>(dr - db)), 1);
    ++steps;
  }
  for (; steps < da - db + 1; ++steps) r *= lc;
  return r;
}

// gcd of two polynomials that are primitive in x, by the subresultant PRS.
MultiPoly subresultant_gcd(MultiPoly a, MultiPoly b, std::size_t x) {
  if (a.degree_in(x) < b.degree_in(x)) std::swap(a, b);
  const RingPtr& ring = a.ring();
  MultiPoly g = MultiPoly::constant(ring, 1), h = MultiPoly::constant(ring, 1);
  for (;;) {
    const auto delta = static_cast<unsigned>(a.degree_in(x) - b.degree_in(x));
    MultiPoly r = exact_prem(a, b, x);
    if (r.is_zero()) break;
    if (!r.involves(x)) return MultiPoly::constant(ring, 1);
    a = std::move(b);
    b = divide_or_throw(r, g * h.pow(delta));
    g = leading_coefficient_in(a, x);
    h = delta == 0 ? h : divide_or_throw(g.pow(delta), h.pow(delta - 1));
  }
  return divide_or_throw(b, content_in(b, x));
}

// Exponentwise minimum over the terms of p, folded into m.
Monomial min_exponents(const MultiPoly& p, Monomial m) {
  for (const auto& t : p.terms())
    for (std::size_t s = 0; s < m.size(); ++s) m.set(s, std::min(m[s], t.monomial[s]));
  return m;
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  const RingPtr& ring = a.ring();
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(ring, 1);
  if (a.size() == 1 || b.size() == 1) {
    Monomial m = min_exponents(b, min_exponents(a, a.leading_monomial()));
    return MultiPoly::monomial(ring, m);
  }

  // A symbol present in only one input can only enter through its content.
  std::optional<std::size_t> x;
  std::int64_t best = 0;
  for (std::size_t s = 0; s < ring->nsymbols(); ++s) {
    const auto da = a.degree_in(s), db = b.degree_in(s);
    if (da > 0 && db == 0) return content_in(a, s, b.primitive_part());
    if (db > 0 && da == 0) return content_in(b, s, a.primitive_part());
    if (da > 0 && (!x || std::max(da, db) < best)) {
      x = s;
      best = std::max(da, db);
    }
  }
  if (!x) return MultiPoly::constant(ring, 1);

  MultiPoly ca = content_in(a, *x), cb = content_in(b, *x);
  MultiPoly common = gcd_impl(ca, cb);
  if (coprime_in(a, b, *x)) return common.primitive_part();
  MultiPoly p = subresultant_gcd(divide_or_throw(a, ca), divide_or_throw(b, cb), *x);
  return (common * p).primitive_part();
}

} // namespace

MultiPoly multivariate_gcd(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a.ring(), b.ring(), "multivariate_gcd");
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  return gcd_impl(a, b);
}

MultiPoly multivariate_lcm(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a.ring(), b.ring(), "multivariate_lcm");
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.ring());
  return divide_or_throw(a * b, multivariate_gcd(a, b)).primitive_part();
}

} // namespace diffideal
