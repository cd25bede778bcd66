#include "diffideal/univariate.hpp"

#include "diffideal/error.hpp"
#include "diffideal/gcd.hpp"

#include <algorithm>
#include <map>

namespace diffideal {

namespace {

BigInteger pollard_rho(const BigInteger& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInteger x = 2, y = 2, d = 1;
    auto step = [&](BigInteger& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      BigInteger diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void split(const BigInteger& n, std::map<BigInteger, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    ++out[n];
    return;
  }
  BigInteger d = pollard_rho(n);
  split(d, out);
  split(BigInteger(n / d), out);
}

std::vector<BigInteger> divisors(const BigInteger& n) {
  std::vector<BigInteger> divs{1};
  for (const auto& [p, k] : factor_integer(n)) {
    std::size_t existing = divs.size();
    BigInteger power = 1;
    for (unsigned e = 1; e <= k; ++e) {
      power *= p;
      for (std::size_t i = 0; i < existing; ++i) divs.push_back(divs[i] * power);
    }
  }
  return divs;
}

} // namespace

std::vector<std::pair<BigInteger, unsigned>> factor_integer(const BigInteger& n) {
  if (n == 0) throw DomainError("cannot factor zero");
  BigInteger m = abs(n);
  std::map<BigInteger, unsigned> found;
  for (unsigned long p = 2; p < 10000 && m > 1; ++p) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      ++found[BigInteger(p)];
      m /= p;
    }
  }
  split(m, found);
  return {found.begin(), found.end()};
}

MultiPoly square_free_part(const MultiPoly& f, std::size_t symbol) {
  if (!f.involves(symbol)) return f.primitive_part();
  return divide_or_throw(f, multivariate_gcd(f, f.derivative(symbol))).primitive_part();
}

std::vector<BigRational> rational_roots(const MultiPoly& f, std::size_t symbol) {
  if (f.is_zero()) throw DomainError("rational_roots of the zero polynomial");
  for (std::size_t s = 0; s < f.ring()->nsymbols(); ++s)
    if (s != symbol && f.involves(s)) throw DomainError("rational_roots expects a univariate polynomial");

  MultiPoly g = square_free_part(f, symbol);
  auto degree = static_cast<std::size_t>(std::max<std::int64_t>(g.degree_in(symbol), 0));
  std::vector<BigInteger> coeffs(degree + 1, 0); // coeffs[e] multiplies x^e
  for (const auto& t : g.terms()) coeffs[t.monomial[symbol]] = t.coeff.get_num();

  std::vector<BigRational> roots;
  std::size_t low = 0;
  while (low <= degree && coeffs[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (low >= degree) return roots;

  auto eval = [&](const BigRational& x) {
    BigRational acc = 0;
    for (std::size_t e = degree + 1; e-- > low;) acc = acc * x + coeffs[e];
    return acc;
  };
  for (const auto& p : divisors(coeffs[low])) {
    for (const auto& q : divisors(coeffs[degree])) {
      for (int sign : {1, -1}) {
        BigRational x = make_rational(p * sign, q);
        if (eval(x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

} // namespace diffideal
