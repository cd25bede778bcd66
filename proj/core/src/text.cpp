#include "diffideal/text.hpp"

#include "diffideal/error.hpp"

#include <cctype>
#include <limits>

namespace diffideal {

namespace {

class Parser {
public:
  Parser(const RingPtr& ring, std::string_view text, std::size_t line)
      : ring_(ring), text_(text), line_(line) {}

  RationalFunction parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    RationalFunction r = expression();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RationalFunction expression() {
    RationalFunction acc = term();
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  RationalFunction term() {
    RationalFunction acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        std::size_t at = pos_;
        RationalFunction d = factor();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc = acc / d;
      } else {
        char c = peek();
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
          fail("implicit multiplication is not allowed; use '*'");
        return acc;
      }
    }
  }

  RationalFunction factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    RationalFunction base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      auto digits = text_.substr(start, pos_ - start);
      if (digits.size() > 6) fail("exponent too large");
      return base.pow(std::stoi(std::string(digits)));
    }
    return base;
  }

  RationalFunction primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expression();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      BigInteger z(std::string(text_.substr(start, pos_ - start)), 10);
      return MultiPoly::constant(ring_, BigRational(z));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown symbol '" + std::string(name) + "'");
      }
      return MultiPoly::symbol(ring_, *idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

bool bare_numerator(const MultiPoly& p) {
  if (p.size() != 1) return false;
  const BigRational& c = p.leading_coefficient();
  return c == 1 || (p.is_constant() && c > 0 && c.get_den() == 1);
}

// A denominator may only drop its parentheses when it is a single factor.
bool bare_denominator(const MultiPoly& p) {
  if (p.size() != 1) return false;
  const Term& t = p.leading_term();
  if (t.monomial.is_one()) return t.coeff > 0 && t.coeff.get_den() == 1;
  std::size_t symbols = 0;
  for (std::size_t s = 0; s < t.monomial.size(); ++s) symbols += t.monomial[s] > 0;
  return t.coeff == 1 && symbols == 1;
}

std::string wrap(const MultiPoly& p, bool bare) {
  std::string s = to_string(p);
  return bare ? s : "(" + s + ")";
}

} // namespace

RationalFunction parse_rational_function(const RingPtr& ring, std::string_view text, std::size_t line) {
  return Parser(ring, text, line).parse();
}

MultiPoly parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line) {
  RationalFunction r = parse_rational_function(ring, text, line);
  if (!r.is_polynomial())
    throw ParseError("expected a polynomial, got a rational function", line, 1);
  return r.num() * (1 / r.den().constant_value());
}

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (m[s] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(s);
    if (m[s] > 1) out += '^' + std::to_string(m[s]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    BigRational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    if (t.monomial.is_one()) {
      out += to_string(c);
    } else {
      if (c != 1) out += to_string(c) + "*";
      out += to_string(t.monomial, *p.ring());
    }
  }
  return out;
}

std::string to_string(const RationalFunction& r) {
  if (r.is_polynomial()) return to_string(r.num());
  return wrap(r.num(), bare_numerator(r.num())) + "/" + wrap(r.den(), bare_denominator(r.den()));
}

} // namespace diffideal
