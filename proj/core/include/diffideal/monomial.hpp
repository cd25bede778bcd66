#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace diffideal {

/// Exponent vector with one slot per ring symbol (variables, then parameters).
class Monomial {
public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nsymbols) : exps_(nsymbols, 0) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) { recompute_degree(); }
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) { recompute_degree(); }

  static Monomial unit(std::size_t nsymbols, std::size_t symbol, Exponent power = 1) {
    Monomial m(nsymbols);
    m.exps_[symbol] = power;
    m.degree_ = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, Exponent e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
  }

  /// Degree restricted to the first `count` slots.
  std::uint64_t degree_in_prefix(std::size_t count) const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) of the divisor; unchecked.
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Plain lexicographic comparison of the exponent vectors; only used for
  /// container keys, not as a monomial order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

  std::size_t hash() const;

private:
  void recompute_degree();

  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

/// Monomials of total degree <= max_degree in `nsymbols` symbols, in no
/// particular order.
std::vector<Monomial> monomials_up_to(std::size_t nsymbols, std::size_t max_degree);

} // namespace diffideal

template <>
struct std::hash<diffideal::Monomial> {
  std::size_t operator()(const diffideal::Monomial& m) const { return m.hash(); }
};
