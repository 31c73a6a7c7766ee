#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nearfac/near_factorization.hpp"

namespace nearfac {

// ({e}, G - e).
NearFactorization trivial_nf(const GroupPtr& group);

struct DeCaenParams {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t l = 0;

  // DomainError unless k l = 2n - 1 with n > 2.
  static DeCaenParams make(std::uint32_t n, std::uint32_t k);
};

struct BacsoParams {
  std::uint32_t r = 0;
  std::uint32_t n = 0;   // 2^(2r-1)
  std::uint32_t d1 = 0;  // 2^r + 3
  std::uint32_t d2 = 0;  // 2^(r+1) - 3
  std::uint32_t a0 = 0;  // 2^(r-1) - 1
  std::uint32_t b0 = 0;  // 2^(r-1)
  std::int64_t s = 0;    // 2^(r-1) - 3, negative for r = 2
  std::uint32_t alpha = 0;  // 2^r - 1

  // DomainError unless 2 <= r <= 8.
  static BacsoParams make(std::uint32_t r);
};

// A = {b^i : 1 <= i <= (k-1)/2} u {ab^i : 0 <= i <= (k-1)/2},
// B = {e} u {b^(jk), ab^(jk) : 1 <= j <= (l-1)/2}.
// Throws CapabilityError if the pattern fails verify() for these parameters.
NearFactorization decaen_nf(std::uint32_t n, std::uint32_t k);

NearFactorization bacso_nf(std::uint32_t r);

// (f_{-d1 mod n, 0}, e), carrying decaen_nf(n, 2^r - 1) onto bacso_nf(r).
EquivalenceMap decaen_bacso_witness(std::uint32_t r);

struct SetPair {
  ElementSet a;
  ElementSet b;
};

// Two-set SEDF in Z_(a^2+1) from a blowup sequence (a, a) or (j, j, k, k),
// a = jk with j, k > 1 odd. DomainError for other shapes.
SetPair blowup_sedf(std::span<const std::uint32_t> seq);
// The corresponding near-factorization (-A, B).
NearFactorization blowup_nf(std::span<const std::uint32_t> seq);

// X contains {x, x + d, ..., x + (length-1) d} mod m with distinct terms.
bool has_wraparound_ap(const FiniteGroup& group, std::span<const Element> set, std::size_t length);

}  // namespace nearfac
