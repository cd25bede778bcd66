#include "oracles/macaulay.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>

namespace diffideal::oracle {

namespace {

using Exps = std::vector<int>;
using Vec = std::map<Exps, mpq_class>; // sparse column, keyed by monomial

Vec to_vec(const MultiPoly& p) {
  Vec v;
  for (const Term& t : p.terms()) {
    Exps e(t.monomial.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<int>(t.monomial[i]);
    v[e] = t.coeff;
  }
  return v;
}

void all_exps(std::size_t n, int max_deg, Exps& cur, std::size_t i, std::vector<Exps>& out) {
  if (i == n) {
    out.push_back(cur);
    return;
  }
  int used = 0;
  for (std::size_t k = 0; k < i; ++k) used += cur[k];
  for (int e = 0; used + e <= max_deg; ++e) {
    cur[i] = e;
    all_exps(n, max_deg, cur, i + 1, out);
  }
  cur[i] = 0;
}

Vec shift(const Vec& v, const Exps& m) {
  Vec out;
  for (const auto& [e, c] : v) {
    Exps s = e;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += m[i];
    out.emplace(std::move(s), c);
  }
  return out;
}

// Echelon basis keyed by pivot (the largest monomial of each vector in map order).
struct Echelon {
  std::map<Exps, Vec> rows;

  void reduce(Vec& v) const {
    while (!v.empty()) {
      auto top = std::prev(v.end());
      auto it = rows.find(top->first);
      if (it == rows.end()) return;
      mpq_class f = top->second / it->second.rbegin()->second;
      for (const auto& [e, c] : it->second) {
        mpq_class& slot = v[e];
        slot -= f * c;
        if (slot == 0) v.erase(e);
      }
    }
  }

  // Every combination of rows has a pivot on top, so a vector lies in the
  // span iff eliminating tops empties it.
  bool reduces_to_zero(Vec v) const {
    reduce(v);
    return v.empty();
  }

  void insert(Vec v) {
    reduce(v);
    if (v.empty()) return;
    Exps pivot = std::prev(v.end())->first;
    rows.emplace(std::move(pivot), std::move(v));
  }
};

} // namespace

bool macaulay_member(const MultiPoly& p, const std::vector<MultiPoly>& generators, std::size_t bound) {
  if (p.is_zero()) return true;
  const std::size_t n = p.ring()->nsymbols();
  Echelon ech;
  for (const MultiPoly& g : generators) {
    if (g.is_zero()) continue;
    int room = static_cast<int>(bound) - static_cast<int>(g.degree());
    if (room < 0) continue;
    std::vector<Exps> mults;
    Exps cur(n, 0);
    all_exps(n, room, cur, 0, mults);
    Vec gv = to_vec(g);
    for (const Exps& m : mults) ech.insert(shift(gv, m));
  }
  return ech.reduces_to_zero(to_vec(p));
}

bool macaulay_member(const MultiPoly& p, const std::vector<MultiPoly>& generators) {
  return macaulay_member(p, generators, static_cast<std::size_t>(std::max<std::int64_t>(p.degree(), 0)) + 4);
}

} // namespace diffideal::oracle
