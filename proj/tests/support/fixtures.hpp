#pragma once

#include "diffideal/derivation.hpp"
#include "diffideal/text.hpp"

#include <string>
#include <vector>

namespace diffideal::testing {

inline DifferentialRing make_ring(std::vector<std::string> vars, std::vector<std::string> params,
                                  const std::vector<std::string>& images,
                                  MonomialOrder::Kind order = MonomialOrder::Kind::grevlex) {
  RingPtr r = Ring::make(std::move(vars), std::move(params), order);
  std::vector<MultiPoly> polys;
  for (const auto& s : images) polys.push_back(parse_polynomial(r, s));
  return DifferentialRing::from_polynomials(r, polys);
}

/// X' = X^3 - 2X^2 + 2X with k parameters a1..ak sharing the same law.
inline DifferentialRing cubic_family(int k) {
  std::vector<std::string> params, images{"X^3 - 2*X^2 + 2*X"};
  for (int i = 1; i <= k; ++i) {
    std::string a = "a" + std::to_string(i);
    params.push_back(a);
    images.push_back(a + "^3 - 2*" + a + "^2 + 2*" + a);
  }
  return make_ring({"X"}, params, images);
}

} // namespace diffideal::testing
