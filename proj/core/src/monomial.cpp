#include "diffideal/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace diffideal {

void Monomial::recompute_degree() {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

std::uint64_t Monomial::degree_in_prefix(std::size_t count) const {
  return std::accumulate(exps_.begin(), exps_.begin() + static_cast<std::ptrdiff_t>(count),
                         std::uint64_t{0});
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  r.degree_ -= divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  r.recompute_degree();
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : exps_) h = (h ^ e) * 0x100000001b3ULL;
  return h;
}

namespace {

void enumerate(std::vector<Monomial::Exponent>& current, std::size_t slot, std::size_t budget,
               std::vector<Monomial>& out) {
  if (slot == current.size()) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t e = 0; e <= budget; ++e) {
    current[slot] = static_cast<Monomial::Exponent>(e);
    enumerate(current, slot + 1, budget - e, out);
  }
  current[slot] = 0;
}

} // namespace

std::vector<Monomial> monomials_up_to(std::size_t nsymbols, std::size_t max_degree) {
  std::vector<Monomial> out;
  std::vector<Monomial::Exponent> current(nsymbols, 0);
  enumerate(current, 0, max_degree, out);
  return out;
}

} // namespace diffideal
