#pragma once

#include "diffideal/monomial.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace diffideal {

/// Total order on monomials compatible with multiplication, with 1 minimal.
///
/// `priority` lists symbol indices from most to least significant. For lex the
/// first differing symbol in priority order decides. For grevlex total degree
/// decides first, then the last differing symbol in priority order (smaller
/// exponent wins). Block orders compare the first `block` priority symbols by
/// grevlex and break ties with grevlex on the rest, which makes them
/// elimination orders for the leading block.
class MonomialOrder {
public:
  enum class Kind { lex, grevlex, block };

  MonomialOrder() = default;
  static MonomialOrder lex(std::size_t nsymbols);
  static MonomialOrder grevlex(std::size_t nsymbols);
  static MonomialOrder block(std::size_t nsymbols, std::size_t leading);
  MonomialOrder(Kind kind, std::vector<std::size_t> priority, std::size_t block = 0);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  std::size_t block_size() const { return block_; }

  /// Negative, zero, or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
  int compare_grevlex(const Monomial& a, const Monomial& b, std::size_t first,
                      std::size_t last) const;

  Kind kind_ = Kind::grevlex;
  std::vector<std::size_t> priority_;
  std::size_t block_ = 0;
};

std::string to_string(MonomialOrder::Kind kind);
/// Accepts "lex" and "grevlex"; throws DomainError otherwise.
MonomialOrder::Kind parse_order_kind(std::string_view text);

} // namespace diffideal
