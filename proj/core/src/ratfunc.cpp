#include "diffideal/ratfunc.hpp"

#include "diffideal/error.hpp"
#include "diffideal/gcd.hpp"

#include <cstdlib>

namespace diffideal {

namespace {

std::pair<MultiPoly, MultiPoly> canonical(const MultiPoly& num, const MultiPoly& den) {
  require_same_ring(num.ring(), den.ring(), "rational function");
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) return {num, MultiPoly::constant(num.ring(), 1)};
  MultiPoly n = num, d = den;
  if (!d.is_constant()) {
    MultiPoly g = multivariate_gcd(n, d);
    if (!g.is_one()) {
      n = divide_or_throw(n, g);
      d = divide_or_throw(d, g);
    }
  }
  BigRational scale = 1 / d.leading_coefficient();
  return {n * scale, d * scale};
}

} // namespace

RationalFunction::RationalFunction(RingPtr ring)
    : num_(ring), den_(MultiPoly::constant(ring, 1)) {}

RationalFunction::RationalFunction(const MultiPoly& p)
    : num_(p), den_(MultiPoly::constant(p.ring(), 1)) {}

RationalFunction::RationalFunction(const MultiPoly& num, const MultiPoly& den)
    : num_(num.ring()), den_(num.ring()) {
  std::tie(num_, den_) = canonical(num, den);
}

RationalFunction RationalFunction::unreduced(MultiPoly num, MultiPoly den) {
  require_same_ring(num.ring(), den.ring(), "rational function");
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  return RationalFunction(Raw{}, std::move(num), std::move(den));
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(Raw{}, -num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction RationalFunction::pow(int n) const {
  auto k = static_cast<unsigned>(std::abs(n));
  RationalFunction r(Raw{}, num_.pow(k), den_.pow(k));
  if (n < 0) {
    if (is_zero()) throw DivisionByZero("negative power of zero");
    return {r.den_, r.num_};
  }
  return r;
}

RationalFunction ratfunc_simplify(const RationalFunction& r) { return {r.num(), r.den()}; }

bool equivalent(const RationalFunction& a, const RationalFunction& b) {
  return a.num() * b.den() == b.num() * a.den();
}

} // namespace diffideal
