#include "diffideal/rational.hpp"

#include "diffideal/error.hpp"

#include <cctype>

namespace diffideal {

BigRational make_rational(const BigInteger& num, const BigInteger& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

BigInteger parse_integer(std::string_view text) {
  if (text.empty()) throw DomainError("empty integer literal");
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw DomainError("bad integer literal '" + std::string(text) + "'");
  return BigInteger(std::string(text), 10);
}

} // namespace

BigRational parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  BigRational q;
  if (auto slash = text.find('/'); slash != std::string_view::npos)
    q = make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
  else
    q = BigRational(parse_integer(text));
  return negative ? BigRational(-q) : q;
}

std::string to_string(const BigRational& q) { return q.get_str(); }
std::string to_string(const BigInteger& z) { return z.get_str(); }

} // namespace diffideal
