#include "diffideal/order.hpp"

#include "diffideal/error.hpp"

#include <numeric>

namespace diffideal {

namespace {

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

} // namespace

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority, std::size_t block)
    : kind_(kind), priority_(std::move(priority)), block_(block) {
  std::vector<bool> seen(priority_.size(), false);
  for (std::size_t s : priority_) {
    if (s >= priority_.size() || seen[s])
      throw DomainError("monomial order priority is not a permutation");
    seen[s] = true;
  }
  if (block_ > priority_.size()) throw DomainError("block larger than symbol count");
}

MonomialOrder MonomialOrder::lex(std::size_t n) { return {Kind::lex, identity(n)}; }
MonomialOrder MonomialOrder::grevlex(std::size_t n) { return {Kind::grevlex, identity(n)}; }
MonomialOrder MonomialOrder::block(std::size_t n, std::size_t leading) {
  return {Kind::block, identity(n), leading};
}

int MonomialOrder::compare_grevlex(const Monomial& a, const Monomial& b, std::size_t first,
                                   std::size_t last) const {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = first; i < last; ++i) {
    da += a[priority_[i]];
    db += b[priority_[i]];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = last; i-- > first;) {
    auto ea = a[priority_[i]], eb = b[priority_[i]];
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
  case Kind::lex:
    for (std::size_t s : priority_) {
      if (a[s] != b[s]) return a[s] < b[s] ? -1 : 1;
    }
    return 0;
  case Kind::grevlex:
    return compare_grevlex(a, b, 0, priority_.size());
  case Kind::block:
    if (int c = compare_grevlex(a, b, 0, block_); c != 0) return c;
    return compare_grevlex(a, b, block_, priority_.size());
  }
  return 0;
}

std::string to_string(MonomialOrder::Kind kind) {
  switch (kind) {
  case MonomialOrder::Kind::lex: return "lex";
  case MonomialOrder::Kind::grevlex: return "grevlex";
  case MonomialOrder::Kind::block: return "block";
  }
  return "?";
}

MonomialOrder::Kind parse_order_kind(std::string_view text) {
  if (text == "lex") return MonomialOrder::Kind::lex;
  if (text == "grevlex") return MonomialOrder::Kind::grevlex;
  throw DomainError("unknown monomial order '" + std::string(text) + "' (expected lex or grevlex)");
}

} // namespace diffideal
