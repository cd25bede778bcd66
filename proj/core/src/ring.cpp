#include "diffideal/ring.hpp"

#include "diffideal/error.hpp"

#include <cctype>
#include <unordered_set>

namespace diffideal {

bool valid_symbol_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

RingPtr Ring::make(std::vector<std::string> variables, std::vector<std::string> parameters,
                   MonomialOrder::Kind order) {
  std::size_t nvars = variables.size();
  std::vector<std::string> names = std::move(variables);
  names.insert(names.end(), std::make_move_iterator(parameters.begin()),
               std::make_move_iterator(parameters.end()));
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_symbol_name(n)) throw DomainError("invalid symbol name '" + n + "'");
    if (!seen.insert(n).second) throw DomainError("duplicate symbol name '" + n + "'");
  }
  if (order == MonomialOrder::Kind::block) throw DomainError("block order is internal only");
  MonomialOrder mo = order == MonomialOrder::Kind::lex ? MonomialOrder::lex(names.size())
                                                       : MonomialOrder::grevlex(names.size());
  return RingPtr(new Ring(std::move(names), nvars, std::move(mo)));
}

std::vector<std::string> Ring::variable_names() const {
  return {names_.begin(), names_.begin() + static_cast<std::ptrdiff_t>(nvars_)};
}

std::vector<std::string> Ring::parameter_names() const {
  return {names_.begin() + static_cast<std::ptrdiff_t>(nvars_), names_.end()};
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view op) {
  if (!same_ring(a, b)) throw RingMismatch(std::string(op) + ": operands belong to different rings");
}

} // namespace diffideal
