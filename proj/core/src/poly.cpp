#include "diffideal/poly.hpp"

#include "diffideal/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace diffideal {

namespace {

void sort_terms(const Ring& ring, std::vector<Term>& terms) {
  const auto& order = ring.order();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
}

void check_shape(const Ring& ring, const Monomial& m) {
  if (m.size() != ring.nsymbols()) throw RingMismatch("monomial has wrong number of exponents");
}

} // namespace

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  std::unordered_map<Monomial, BigRational> acc;
  acc.reserve(terms.size());
  for (auto& t : terms) {
    check_shape(*ring, t.monomial);
    if (t.coeff == 0) continue;
    auto [it, fresh] = acc.try_emplace(std::move(t.monomial), t.coeff);
    if (!fresh) it->second += t.coeff;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, c});
  sort_terms(*ring, out);
  return MultiPoly(std::move(ring), std::move(out));
}

MultiPoly MultiPoly::constant(RingPtr ring, const BigRational& c) {
  std::vector<Term> t;
  if (c != 0) t.push_back({ring->one(), c});
  return MultiPoly(std::move(ring), std::move(t));
}

MultiPoly MultiPoly::symbol(RingPtr ring, std::size_t s) {
  if (s >= ring->nsymbols()) throw RingMismatch("symbol index out of range");
  auto m = ring->symbol(s);
  return MultiPoly(std::move(ring), {Term{std::move(m), 1}});
}

MultiPoly MultiPoly::monomial(RingPtr ring, Monomial m, const BigRational& c) {
  check_shape(*ring, m);
  std::vector<Term> t;
  if (c != 0) t.push_back({std::move(m), c});
  return MultiPoly(std::move(ring), std::move(t));
}

BigRational MultiPoly::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not a constant");
  return terms_.empty() ? BigRational(0) : terms_[0].coeff;
}

bool MultiPoly::is_one() const { return is_constant() && !terms_.empty() && terms_[0].coeff == 1; }

std::int64_t MultiPoly::degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max<std::int64_t>(d, static_cast<std::int64_t>(t.monomial.degree()));
  return d;
}

std::int64_t MultiPoly::degree_in(std::size_t symbol) const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max<std::int64_t>(d, t.monomial[symbol]);
  return d;
}

std::int64_t MultiPoly::degree_in_variables() const {
  std::int64_t d = -1;
  for (const auto& t : terms_)
    d = std::max<std::int64_t>(d, static_cast<std::int64_t>(t.monomial.degree_in_prefix(ring_->nvariables())));
  return d;
}

BigRational MultiPoly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return 0;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merges two descending term lists; `sign` scales the second.
std::vector<Term> merge(const MonomialOrder& order, const std::vector<Term>& a,
                        std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : order.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      BigRational s = sign < 0 ? BigRational(a[i].coeff - b[j].coeff) : BigRational(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back({a[i].monomial, s});
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_ring(ring_, other.ring_, "poly_add");
  terms_ = merge(ring_->order(), terms_, other.terms_, 1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_ring(ring_, other.ring_, "poly_sub");
  terms_ = merge(ring_->order(), terms_, other.terms_, -1);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a.ring_, b.ring_, "poly_mul");
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.ring_);
  std::vector<Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prods.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  return MultiPoly::from_terms(a.ring_, std::move(prods));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result = constant(ring_, 1);
  MultiPoly base = *this;
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const BigRational& c) const {
  if (c == 0) return MultiPoly(ring_);
  MultiPoly r(*this);
  for (auto& t : r.terms_) {
    t.monomial = t.monomial * m;
    t.coeff *= c;
  }
  return r;
}

MultiPoly MultiPoly::derivative(std::size_t symbol) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    auto e = t.monomial[symbol];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(symbol, e - 1);
    out.push_back({std::move(m), t.coeff * e});
  }
  return from_terms(ring_, std::move(out));
}

MultiPoly MultiPoly::substitute(std::size_t symbol, const BigRational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto e = t.monomial[symbol];
    BigRational c = t.coeff;
    if (e != 0) {
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(), e);
      mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), e);
      c *= BigRational(num, den);
    }
    Monomial m = t.monomial;
    m.set(symbol, 0);
    out.push_back({std::move(m), c});
  }
  return from_terms(ring_, std::move(out));
}

MultiPoly MultiPoly::compose(std::size_t symbol, const MultiPoly& value) const {
  require_same_ring(ring_, value.ring_, "compose");
  MultiPoly result(ring_);
  std::vector<MultiPoly> powers{constant(ring_, 1)};
  for (const auto& t : terms_) {
    auto e = t.monomial[symbol];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial m = t.monomial;
    m.set(symbol, 0);
    result += powers[e].mul_term(m, t.coeff);
  }
  return result;
}

BigRational MultiPoly::evaluate(std::span<const BigRational> point) const {
  if (point.size() != ring_->nsymbols()) throw RingMismatch("evaluation point has wrong dimension");
  BigRational sum = 0;
  for (const auto& t : terms_) {
    BigRational v = t.coeff;
    for (std::size_t s = 0; s < point.size(); ++s)
      for (Monomial::Exponent k = 0; k < t.monomial[s]; ++k) v *= point[s];
    sum += v;
  }
  return sum;
}

BigRational MultiPoly::content() const {
  if (terms_.empty()) return 0;
  BigInteger g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  return make_rational(g, l);
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  BigRational c = content();
  if (leading_coefficient() < 0) c = -c;
  MultiPoly r(*this);
  r *= BigRational(1 / c);
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  MultiPoly r(*this);
  r *= BigRational(1 / leading_coefficient());
  return r;
}

MultiPoly MultiPoly::rebase(const RingPtr& target) const {
  std::vector<std::size_t> map(ring_->nsymbols());
  for (std::size_t s = 0; s < ring_->nsymbols(); ++s) {
    if (!involves(s)) continue;
    auto idx = target->index_of(ring_->name(s));
    if (!idx) throw RingMismatch("symbol '" + ring_->name(s) + "' missing from target ring");
    map[s] = *idx;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = target->one();
    for (std::size_t s = 0; s < ring_->nsymbols(); ++s)
      if (t.monomial[s] != 0) m.set(map[s], t.monomial[s]);
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(target, std::move(out));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a.ring(), b.ring(), "exact_divide");
  if (b.is_zero()) throw DivisionByZero("exact_divide by the zero polynomial");
  const auto& lt = b.leading_term();
  std::vector<Term> quotient;
  MultiPoly rem = a;
  while (!rem.is_zero()) {
    const auto& head = rem.leading_term();
    if (!lt.monomial.divides(head.monomial)) return std::nullopt;
    Term q{head.monomial / lt.monomial, head.coeff / lt.coeff};
    rem -= b.mul_term(q.monomial, q.coeff);
    quotient.push_back(std::move(q));
  }
  return MultiPoly::from_terms(a.ring(), std::move(quotient));
}

MultiPoly divide_or_throw(const MultiPoly& a, const MultiPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw DomainError("division is not exact");
  return std::move(*q);
}

bool associated(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a.ring(), b.ring(), "associated");
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.size() != b.size()) return false;
  return a.primitive_part() == b.primitive_part();
}

} // namespace diffideal
