#pragma once

#include "diffideal/order.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace diffideal {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Symbol declaration of Q[variables, parameters]. Parameters are ordinary
/// ring symbols; they only differ from variables in how analyses treat them
/// (a Darboux polynomial must involve a variable, a rescaling factor must not).
class Ring {
public:
  /// Names must be unique and match [A-Za-z][A-Za-z0-9_]*.
  static RingPtr make(std::vector<std::string> variables, std::vector<std::string> parameters = {},
                      MonomialOrder::Kind order = MonomialOrder::Kind::grevlex);

  std::size_t nsymbols() const { return names_.size(); }
  std::size_t nvariables() const { return nvars_; }
  std::size_t nparameters() const { return names_.size() - nvars_; }
  bool is_variable(std::size_t symbol) const { return symbol < nvars_; }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t symbol) const { return names_[symbol]; }
  std::vector<std::string> variable_names() const;
  std::vector<std::string> parameter_names() const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Storage and printing order for polynomials of this ring.
  const MonomialOrder& order() const { return order_; }

  Monomial one() const { return Monomial(nsymbols()); }
  Monomial symbol(std::size_t s, Monomial::Exponent power = 1) const {
    return Monomial::unit(nsymbols(), s, power);
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.nvars_ == b.nvars_ && a.names_ == b.names_ && a.order_ == b.order_;
  }

private:
  Ring(std::vector<std::string> names, std::size_t nvars, MonomialOrder order)
      : names_(std::move(names)), nvars_(nvars), order_(std::move(order)) {}

  std::vector<std::string> names_;
  std::size_t nvars_;
  MonomialOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
/// Throws RingMismatch unless same_ring(a, b).
void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view op);

bool valid_symbol_name(std::string_view name);

} // namespace diffideal
