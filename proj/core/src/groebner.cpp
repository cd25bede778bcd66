#include "diffideal/groebner.hpp"

#include "diffideal/error.hpp"
#include "diffideal/gcd.hpp"
#include "diffideal/linalg.hpp"
#include "diffideal/univariate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace diffideal {

namespace {

// Integer-coefficient polynomial sorted in decreasing `order`; the working
// representation of the Buchberger loop.
struct ITerm {
  Monomial m;
  BigInteger c;
};
using IPoly = std::vector<ITerm>;

BigInteger content_of(const IPoly& p) {
  BigInteger g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Divides out the content and makes the leading coefficient positive; returns
// the divisor used (signed).
BigInteger make_primitive(IPoly& p) {
  if (p.empty()) return 1;
  BigInteger g = content_of(p);
  if (p.front().c < 0) g = -g;
  if (g != 1)
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  return g;
}

// Integer associate k*p of a rational polynomial; returns k.
BigRational to_ipoly(const MultiPoly& p, const MonomialOrder& order, IPoly& out) {
  BigInteger l = 1;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  out.clear();
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.monomial, t.coeff.get_num() * (l / t.coeff.get_den())});
  std::sort(out.begin(), out.end(), [&](const ITerm& a, const ITerm& b) { return order.greater(a.m, b.m); });
  BigInteger g = make_primitive(out);
  return BigRational(l) / BigRational(g);
}

MultiPoly from_ipoly(const RingPtr& ring, const IPoly& p, const BigRational& scale) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.push_back({t.m, BigRational(t.c) / scale});
  return MultiPoly::from_terms(ring, std::move(terms));
}

// a*h[from..] - b*mult*g, dropping the cancelled leading term.
IPoly combine(const MonomialOrder& order, const IPoly& h, std::size_t from, const BigInteger& a,
              const BigInteger& b, const Monomial& mult, const IPoly& g) {
  IPoly out;
  out.reserve(h.size() - from + g.size());
  std::size_t i = from, j = 0;
  while (i < h.size() || j < g.size()) {
    int c;
    Monomial gm;
    if (j < g.size()) gm = g[j].m * mult;
    if (i == h.size()) c = -1;
    else if (j == g.size()) c = 1;
    else c = order.compare(h[i].m, gm);
    if (c > 0) {
      out.push_back({h[i].m, a * h[i].c});
      ++i;
    } else if (c < 0) {
      out.push_back({std::move(gm), -b * g[j].c});
      ++j;
    } else {
      BigInteger v = a * h[i].c - b * g[j].c;
      if (v != 0) out.push_back({h[i].m, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction of h by `reducers`. On return h_reduced = scale * NF(h).
IPoly reduce_full(const MonomialOrder& order, IPoly h, const std::vector<const IPoly*>& reducers,
                  BigRational& scale) {
  IPoly result;
  std::size_t head = 0;
  unsigned steps = 0;
  while (head < h.size()) {
    const ITerm& lead = h[head];
    const IPoly* red = nullptr;
    for (const IPoly* g : reducers)
      if (g->front().m.divides(lead.m)) {
        red = g;
        break;
      }
    if (red == nullptr) {
      result.push_back(h[head++]);
      continue;
    }
    BigInteger a = red->front().c, b = lead.c, gg;
    mpz_gcd(gg.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= gg;
    b /= gg;
    if (a < 0) {
      a = -a;
      b = -b;
    }
    Monomial mult = lead.m / red->front().m;
    IPoly rest(red->begin() + 1, red->end());
    h = combine(order, h, head + 1, a, b, mult, rest);
    head = 0;
    if (a != 1) {
      for (auto& t : result) t.c *= a;
      scale *= a;
    }
    if (++steps % 8 == 0) {
      // Keep coefficients small: divide the common content of result and h.
      BigInteger g = content_of(result);
      for (const auto& t : h) {
        if (g == 1) break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
      }
      if (g > 1) {
        for (auto& t : result) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
        for (auto& t : h) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
        scale /= g;
      }
    }
  }
  BigInteger g = make_primitive(result);
  scale /= g;
  return result;
}

IPoly reduce_full(const MonomialOrder& order, IPoly h, const std::vector<const IPoly*>& reducers) {
  BigRational scale = 1;
  return reduce_full(order, std::move(h), reducers, scale);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
public:
  Buchberger(RingPtr ring, const MonomialOrder& order) : ring_(std::move(ring)), order_(order) {}

  GroebnerBasis run(const std::vector<MultiPoly>& generators) {
    std::vector<IPoly> inputs;
    for (const auto& g : generators) {
      if (g.is_zero()) continue;
      IPoly p;
      to_ipoly(g, order_, p);
      inputs.push_back(std::move(p));
    }
    // Deterministic regardless of input order.
    std::sort(inputs.begin(), inputs.end(), [&](const IPoly& a, const IPoly& b) {
      return less_poly(a, b);
    });
    for (auto& p : inputs) {
      if (!add(std::move(p))) return unit();
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        if (int c = order_.compare(a.lcm, b.lcm); c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      Pair p = *best;
      pairs_.erase(best);
      if (!add(s_polynomial(p))) return unit();
    }
    return finish();
  }

private:
  bool less_poly(const IPoly& a, const IPoly& b) const {
    for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
      if (int c = order_.compare(a[k].m, b[k].m); c != 0) return c < 0;
      if (a[k].c != b[k].c) return a[k].c < b[k].c;
    }
    return a.size() < b.size();
  }

  std::vector<const IPoly*> reducers() const {
    std::vector<const IPoly*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  IPoly s_polynomial(const Pair& p) const {
    const IPoly& f = polys_[p.i];
    const IPoly& g = polys_[p.j];
    BigInteger a = g.front().c, b = f.front().c, gg;
    mpz_gcd(gg.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= gg;
    b /= gg;
    IPoly scaled_f;
    Monomial mf = p.lcm / f.front().m;
    scaled_f.reserve(f.size() - 1);
    for (std::size_t k = 1; k < f.size(); ++k) scaled_f.push_back({f[k].m * mf, f[k].c});
    IPoly g_tail(g.begin() + 1, g.end());
    return combine(order_, scaled_f, 0, a, b, p.lcm / g.front().m, g_tail);
  }

  // Returns false when the ideal became the unit ideal.
  bool add(IPoly h) {
    h = reduce_full(order_, std::move(h), reducers());
    if (h.empty()) return true;
    if (h.front().m.is_one()) return false;
    update(std::move(h));
    return true;
  }

  // Gebauer-Moeller installation of a new element.
  void update(IPoly h) {
    std::size_t t = polys_.size();
    const Monomial lm_h = h.front().m;
    polys_.push_back(std::move(h));
    active_.push_back(false);

    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < t; ++k)
      if (active_[k]) candidates.push_back({k, t, polys_[k].front().m.lcm(lm_h)});
    auto coprime = [&](const Pair& p) { return polys_[p.i].front().m.coprime(lm_h); };

    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& p = candidates[k];
      bool redundant = false;
      if (!coprime(p)) {
        for (std::size_t q = k + 1; q < candidates.size() && !redundant; ++q)
          redundant = candidates[q].lcm.divides(p.lcm);
        for (std::size_t q = 0; q < kept.size() && !redundant; ++q) redundant = kept[q].lcm.divides(p.lcm);
      }
      if (!redundant) kept.push_back(p);
    }

    std::vector<Pair> next;
    for (auto& p : pairs_) {
      bool drop = lm_h.divides(p.lcm) && polys_[p.i].front().m.lcm(lm_h) != p.lcm &&
                  polys_[p.j].front().m.lcm(lm_h) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : kept)
      if (!coprime(p)) next.push_back(std::move(p));
    pairs_ = std::move(next);

    for (std::size_t k = 0; k < t; ++k)
      if (active_[k] && lm_h.divides(polys_[k].front().m)) active_[k] = false;
    active_[t] = true;
  }

  GroebnerBasis unit() const {
    return {ring_, order_, {MultiPoly::constant(ring_, 1)}};
  }

  GroebnerBasis finish() const {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) idx.push_back(k);
    std::vector<std::pair<Monomial, MultiPoly>> reduced;
    for (std::size_t k : idx) {
      std::vector<const IPoly*> others;
      for (std::size_t o : idx)
        if (o != k) others.push_back(&polys_[o]);
      const ITerm& lead = polys_[k].front();
      BigRational scale = 1;
      IPoly tail = reduce_full(order_, IPoly(polys_[k].begin() + 1, polys_[k].end()), others, scale);
      // element = lead + tail/scale, made monic.
      BigRational denom = scale * BigRational(lead.c);
      std::vector<Term> terms{{lead.m, 1}};
      for (const auto& t : tail) terms.push_back({t.m, BigRational(t.c) / denom});
      reduced.emplace_back(lead.m, MultiPoly::from_terms(ring_, std::move(terms)));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const auto& a, const auto& b) { return order_.compare(a.first, b.first) < 0; });
    GroebnerBasis out{ring_, order_, {}};
    for (auto& [m, p] : reduced) out.polys.push_back(std::move(p));
    return out;
  }

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<IPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

} // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(leading_term(p, order).monomial);
  return out;
}

bool GroebnerBasis::is_zero_dimensional() const {
  if (is_unit()) return true;
  auto lms = leading_monomials();
  for (std::size_t s = 0; s < ring->nsymbols(); ++s) {
    bool found = std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) { return m[s] > 0 && m[s] == m.degree(); });
    if (!found) return false;
  }
  return true;
}

std::vector<Monomial> GroebnerBasis::standard_monomials() const {
  if (!is_zero_dimensional()) throw DimensionError("ideal is not zero-dimensional");
  if (is_unit()) return {};
  auto lms = leading_monomials();
  auto standard = [&](const Monomial& m) {
    return std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::set<Monomial> seen{ring->one()};
  std::vector<Monomial> frontier{ring->one()};
  while (!frontier.empty()) {
    Monomial m = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t s = 0; s < ring->nsymbols(); ++s) {
      Monomial next = m * ring->symbol(s);
      if (standard(next) && seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  return out;
}

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring(), "ideal generator");
    if (g.is_zero()) continue;
    if (std::find(generators_.begin(), generators_.end(), g) != generators_.end()) continue;
    generators_.push_back(std::move(g));
  }
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [&] {
    cache_->basis = std::make_unique<GroebnerBasis>(
        generators_.empty() ? GroebnerBasis{ring_, ring_->order(), {}} : buchberger(generators_, ring_->order()));
  });
  return *cache_->basis;
}

Ideal Ideal::with(std::vector<MultiPoly> extra) const {
  std::vector<MultiPoly> gens = generators_;
  gens.insert(gens.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));
  return {ring_, std::move(gens)};
}

const Term& leading_term(const MultiPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw DomainError("leading term of the zero polynomial");
  auto terms = p.terms();
  const Term* best = &terms[0];
  for (const auto& t : terms)
    if (order.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& generators, const MonomialOrder& order) {
  if (generators.empty()) throw DomainError("buchberger needs at least one generator to know the ring");
  const RingPtr& ring = generators.front().ring();
  for (const auto& g : generators) require_same_ring(ring, g.ring(), "buchberger");
  if (order.priority().size() != ring->nsymbols()) throw RingMismatch("monomial order has wrong arity");
  return Buchberger(ring, order).run(generators);
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
  if (ideal.is_zero()) return {ideal.ring(), order, {}};
  return buchberger(ideal.generators(), order);
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& basis) {
  require_same_ring(p.ring(), basis.ring, "normal_form");
  if (p.is_zero()) return p;
  std::vector<IPoly> store(basis.polys.size());
  std::vector<const IPoly*> reducers;
  for (std::size_t k = 0; k < basis.polys.size(); ++k) {
    to_ipoly(basis.polys[k], basis.order, store[k]);
    reducers.push_back(&store[k]);
  }
  IPoly h;
  BigRational k = to_ipoly(p, basis.order, h);
  BigRational scale = 1;
  IPoly r = reduce_full(basis.order, std::move(h), reducers, scale);
  // r = scale * NF(k * p) = scale * k * NF(p)
  return from_ipoly(p.ring(), r, scale * k);
}

bool ideal_membership(const MultiPoly& p, const Ideal& ideal) {
  require_same_ring(p.ring(), ideal.ring(), "ideal_membership");
  if (p.is_zero()) return true;
  if (ideal.is_zero()) return false;
  return normal_form(p, ideal.groebner()).is_zero();
}

namespace {

// Splits p by its main-variable part: X-monomial -> coefficient in Q[params].
std::map<Monomial, MultiPoly> by_variables(const MultiPoly& p) {
  const std::size_t nvars = p.ring()->nvariables();
  std::map<Monomial, std::vector<Term>> buckets;
  for (const auto& t : p.terms()) {
    Monomial x = p.ring()->one(), rest = t.monomial;
    for (std::size_t s = 0; s < nvars; ++s) {
      x.set(s, t.monomial[s]);
      rest.set(s, 0);
    }
    buckets[x].push_back({std::move(rest), t.coeff});
  }
  std::map<Monomial, MultiPoly> out;
  for (auto& [x, terms] : buckets) out.emplace(x, MultiPoly::from_terms(p.ring(), std::move(terms)));
  return out;
}

} // namespace

bool member_over_parameter_field(const MultiPoly& p, const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  require_same_ring(p.ring(), ring, "member_over_parameter_field");
  if (ring->nparameters() == 0) return ideal_membership(p, ideal);
  if (p.is_zero()) return true;
  if (ideal.is_zero()) return false;

  // A basis for an order eliminating the variables first is also a basis of
  // the extended ideal over Q(params)[variables].
  MonomialOrder block = MonomialOrder::block(ring->nsymbols(), ring->nvariables());
  GroebnerBasis basis = buchberger(ideal, block);
  struct Reducer {
    Monomial lead;
    MultiPoly coeff;
    const MultiPoly* poly;
  };
  std::vector<Reducer> reducers;
  for (const auto& g : basis.polys) {
    auto parts = by_variables(g);
    auto top = std::max_element(parts.begin(), parts.end(), [&](const auto& a, const auto& b) {
      return block.compare(a.first, b.first) < 0;
    });
    if (top->first.is_one()) return true; // a nonzero parameter polynomial is a unit
    reducers.push_back({top->first, top->second, &g});
  }

  MultiPoly r = p;
  for (;;) {
    if (r.is_zero()) return true;
    auto parts = by_variables(r);
    bool reduced = false;
    std::vector<const std::pair<const Monomial, MultiPoly>*> sorted;
    for (const auto& kv : parts) sorted.push_back(&kv);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return block.compare(a->first, b->first) > 0; });
    for (auto* kv : sorted) {
      auto red = std::find_if(reducers.begin(), reducers.end(),
                              [&](const Reducer& g) { return g.lead.divides(kv->first); });
      if (red == reducers.end()) continue;
      MultiPoly shift = MultiPoly::monomial(ring, kv->first / red->lead);
      r = (red->coeff * r - kv->second * shift * *red->poly).primitive_part();
      reduced = true;
      break;
    }
    if (!reduced) return false;
  }
}

Ideal elimination_ideal(const Ideal& ideal, std::span<const std::size_t> keep) {
  const RingPtr& ring = ideal.ring();
  std::vector<bool> kept(ring->nsymbols(), false);
  for (std::size_t s : keep) {
    if (s >= ring->nsymbols()) throw RingMismatch("elimination symbol out of range");
    kept[s] = true;
  }
  std::vector<std::size_t> priority;
  for (std::size_t s = 0; s < ring->nsymbols(); ++s)
    if (!kept[s]) priority.push_back(s);
  for (std::size_t s = 0; s < ring->nsymbols(); ++s)
    if (kept[s]) priority.push_back(s);
  GroebnerBasis basis = buchberger(ideal, MonomialOrder(MonomialOrder::Kind::lex, priority));
  std::vector<MultiPoly> out;
  for (auto& g : basis.polys) {
    bool only_kept = true;
    for (std::size_t s = 0; s < ring->nsymbols() && only_kept; ++s)
      if (!kept[s] && g.involves(s)) only_kept = false;
    if (only_kept) out.push_back(g.primitive_part());
  }
  return {ring, std::move(out)};
}

namespace {

void solve_rec(const std::vector<MultiPoly>& polys, std::vector<BigRational>& point,
               std::vector<bool>& assigned, std::vector<std::vector<BigRational>>& out) {
  const RingPtr& ring = polys.front().ring();
  GroebnerBasis basis = buchberger(polys, MonomialOrder::lex(ring->nsymbols()));
  if (basis.is_unit()) return;
  std::optional<std::size_t> last;
  for (const auto& g : basis.polys)
    for (std::size_t s = 0; s < ring->nsymbols(); ++s)
      if (g.involves(s) && (!last || s > *last)) last = s;
  if (!last) {
    for (std::size_t s = 0; s < ring->nsymbols(); ++s)
      if (!assigned[s]) throw DimensionError("solution set is not finite");
    out.push_back(point);
    return;
  }
  const MultiPoly* univariate = nullptr;
  for (const auto& g : basis.polys) {
    bool only_last = true;
    for (std::size_t s = 0; s < *last && only_last; ++s)
      if (g.involves(s)) only_last = false;
    if (only_last) univariate = &g;
  }
  if (univariate == nullptr) throw DimensionError("lex basis has no univariate element");
  for (const auto& root : rational_roots(*univariate, *last)) {
    std::vector<MultiPoly> next;
    next.push_back(MultiPoly::constant(ring, 0));
    for (const auto& g : basis.polys) {
      MultiPoly h = g.substitute(*last, root);
      if (!h.is_zero()) next.push_back(std::move(h));
    }
    point[*last] = root;
    assigned[*last] = true;
    solve_rec(next, point, assigned, out);
    assigned[*last] = false;
  }
}

// Minimal polynomial of a symbol in Q[symbols]/I via normal forms of powers.
MultiPoly minimal_polynomial(const GroebnerBasis& basis, std::size_t symbol,
                             const std::vector<Monomial>& standard) {
  const RingPtr& ring = basis.ring;
  std::map<Monomial, std::size_t> column;
  for (std::size_t k = 0; k < standard.size(); ++k) column[standard[k]] = k;
  std::vector<MultiPoly> forms;
  MultiPoly power = MultiPoly::constant(ring, 1);
  MultiPoly x = MultiPoly::symbol(ring, symbol);
  for (std::size_t d = 0; d <= standard.size(); ++d) {
    forms.push_back(normal_form(power, basis));
    RationalMatrix m(standard.size(), forms.size());
    for (std::size_t c = 0; c < forms.size(); ++c)
      for (const auto& t : forms[c].terms()) m(column.at(t.monomial), c) = t.coeff;
    auto kernel = nullspace(m);
    if (!kernel.empty()) {
      const auto& v = kernel.front();
      std::vector<Term> terms;
      for (std::size_t e = 0; e < v.size(); ++e)
        if (v[e] != 0) terms.push_back({ring->symbol(symbol, static_cast<Monomial::Exponent>(e)), v[e]});
      return MultiPoly::from_terms(ring, std::move(terms));
    }
    power *= x;
  }
  throw Error("minimal polynomial search did not terminate");
}

} // namespace

RationalSolutions solve_zero_dim_rational(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  if (ideal.is_zero() && ring->nsymbols() > 0) throw DimensionError("the zero ideal is not zero-dimensional");
  RationalSolutions result;
  if (ideal.is_zero()) {
    result.points.emplace_back();
    return result;
  }
  const GroebnerBasis& basis = ideal.groebner();
  if (!basis.is_zero_dimensional()) throw DimensionError("ideal is not zero-dimensional");
  if (basis.is_unit()) return result;

  std::vector<BigRational> point(ring->nsymbols(), 0);
  std::vector<bool> assigned(ring->nsymbols(), false);
  solve_rec(basis.polys, point, assigned, result.points);
  std::sort(result.points.begin(), result.points.end());

  // Distinct solutions over the algebraic closure = standard monomials of the
  // radical, which adds the square-free part of every minimal polynomial.
  auto standard = basis.standard_monomials();
  std::vector<MultiPoly> radical = basis.polys;
  for (std::size_t s = 0; s < ring->nsymbols(); ++s)
    radical.push_back(square_free_part(minimal_polynomial(basis, s, standard), s));
  GroebnerBasis rb = buchberger(radical, ring->order());
  std::size_t total = rb.standard_monomials().size();
  result.non_rational_count = total - result.points.size();
  return result;
}

} // namespace diffideal
