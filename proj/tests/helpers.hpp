#pragma once

#include <random>
#include <vector>

#include "nearfac/group.hpp"
#include "nearfac/near_factorization.hpp"
#include "oracles.hpp"

namespace testing {

inline oracle::Table library_table(const nearfac::FiniteGroup& g) {
  oracle::Table t(g.order(), std::vector<oracle::Code>(g.order()));
  for (auto x : g.elements())
    for (auto y : g.elements()) t[x.code][y.code] = g.mul(x, y).code;
  return t;
}

inline std::vector<std::vector<oracle::Code>> library_auts(const nearfac::FiniteGroup& g) {
  std::vector<std::vector<oracle::Code>> out;
  for (const auto& f : g.automorphisms()) {
    std::vector<oracle::Code> t;
    for (auto x : f.table()) t.push_back(x.code);
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline oracle::Pair to_pair(const nearfac::NearFactorization& nf) {
  return {nearfac::set_codes(nf.a()), nearfac::set_codes(nf.b())};
}

inline nearfac::NearFactorization from_pair(const nearfac::GroupPtr& g, const oracle::Pair& p) {
  return nearfac::NearFactorization(g, p.a, p.b);
}

inline nearfac::EquivalenceMap random_map(const nearfac::GroupPtr& g, std::mt19937& rng) {
  const auto& auts = g->automorphisms();
  std::uniform_int_distribution<std::size_t> pick_f(0, auts.size() - 1);
  std::uniform_int_distribution<std::uint32_t> pick_h(0, static_cast<std::uint32_t>(g->order() - 1));
  return nearfac::EquivalenceMap{auts[pick_f(rng)], nearfac::Element{pick_h(rng)}};
}

}  // namespace testing
