#include "nearfac/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "nearfac/errors.hpp"

namespace nearfac {

NearFactorization trivial_nf(const GroupPtr& group) {
  auto rest = group->elements();
  rest.erase(rest.begin());
  return NearFactorization(group, ElementSet{group->identity()}, std::move(rest));
}

DeCaenParams DeCaenParams::make(std::uint32_t n, std::uint32_t k) {
  if (n < 3) throw DomainError("de Caen construction needs n >= 3");
  if (k == 0 || (2 * n - 1) % k != 0) {
    throw DomainError("k = " + std::to_string(k) + " does not divide 2n - 1 = " + std::to_string(2 * n - 1));
  }
  return DeCaenParams{n, k, (2 * n - 1) / k};
}

BacsoParams BacsoParams::make(std::uint32_t r) {
  if (r < 2 || r > 8) throw DomainError("Bacso construction needs 2 <= r <= 8, got " + std::to_string(r));
  BacsoParams p;
  p.r = r;
  p.n = 1u << (2 * r - 1);
  p.d1 = (1u << r) + 3;
  p.d2 = (1u << (r + 1)) - 3;
  p.a0 = (1u << (r - 1)) - 1;
  p.b0 = 1u << (r - 1);
  p.s = static_cast<std::int64_t>(1u << (r - 1)) - 3;
  p.alpha = (1u << r) - 1;
  return p;
}

NearFactorization decaen_nf(std::uint32_t n, std::uint32_t k) {
  auto p = DeCaenParams::make(n, k);
  auto g = make_group(GroupId::dihedral(n));
  std::vector<Element> a, b{g->identity()};
  for (std::uint32_t i = 1; i <= (k - 1) / 2; ++i) a.push_back(g->rotation(i));
  for (std::uint32_t i = 0; i <= (k - 1) / 2; ++i) a.push_back(g->reflection(i));
  for (std::uint32_t j = 1; j <= (p.l - 1) / 2; ++j) {
    b.push_back(g->rotation(static_cast<std::int64_t>(j) * k));
    b.push_back(g->reflection(static_cast<std::int64_t>(j) * k));
  }
  NearFactorization nf(g, make_set(std::move(a)), make_set(std::move(b)));
  auto report = verify(nf);
  if (!report.is_nf) {
    throw CapabilityError("de Caen pattern for n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                          " does not verify: " + report.reason);
  }
  return nf;
}

NearFactorization bacso_nf(std::uint32_t r) {
  auto p = BacsoParams::make(r);
  auto g = make_group(GroupId::dihedral(p.n));
  std::vector<Element> a{g->reflection(0)}, b{g->identity()};
  for (std::int64_t t = 0; t < p.a0; ++t) {
    a.push_back(g->rotation(-p.s + t * p.d1));
    a.push_back(g->reflection(-p.s + t * p.d1));
  }
  for (std::int64_t t = 1; t <= p.b0; ++t) {
    b.push_back(g->rotation(-p.s + t * p.d2));
    b.push_back(g->reflection(-p.s + t * p.d2));
  }
  NearFactorization nf(g, make_set(std::move(a)), make_set(std::move(b)));
  auto report = verify(nf);
  if (!report.is_nf) throw InvariantViolation("Bacso NF for r = " + std::to_string(r) + " fails: " + report.reason);
  return nf;
}

EquivalenceMap decaen_bacso_witness(std::uint32_t r) {
  auto p = BacsoParams::make(r);
  auto g = make_group(GroupId::dihedral(p.n));
  auto i = static_cast<std::uint32_t>(mod(-static_cast<std::int64_t>(p.d1), p.n));
  return EquivalenceMap{Automorphism::dihedral(g, i, 0), g->identity()};
}

SetPair blowup_sedf(std::span<const std::uint32_t> seq) {
  auto odd_gt1 = [](std::uint32_t x) { return x > 1 && x % 2 == 1; };
  std::vector<std::uint32_t> a, b;
  std::uint32_t m = 0;
  if (seq.size() == 2 && seq[0] == seq[1] && seq[0] > 1) {
    auto s = seq[0];
    m = s * s + 1;
    for (std::uint32_t i = 0; i < s; ++i) a.push_back(i);
    for (std::uint32_t i = 1; i <= s; ++i) b.push_back(i * s);
  } else if (seq.size() == 4 && seq[0] == seq[1] && seq[2] == seq[3] && odd_gt1(seq[0]) && odd_gt1(seq[2])) {
    auto j = seq[0], k = seq[2];
    auto s = j * k;
    m = s * s + 1;
    for (std::uint32_t i = 0; i < j; ++i) {
      for (std::uint32_t h = 0; h < k; ++h) a.push_back(i * k * k + h);
      for (std::uint32_t h = 1; h <= k; ++h) b.push_back((j - 1 + j * i) * k * k + h * k);
    }
  } else {
    throw DomainError("unsupported blowup sequence; expected (a,a) or (j,j,k,k) with j, k > 1 odd");
  }
  for (auto& x : a) x %= m;
  for (auto& x : b) x %= m;
  return SetPair{codes_to_set(a), codes_to_set(b)};
}

NearFactorization blowup_nf(std::span<const std::uint32_t> seq) {
  auto sets = blowup_sedf(seq);
  auto m = sets.a.size() * sets.a.size() + 1;
  auto g = make_group(GroupId::cyclic(static_cast<std::uint32_t>(m)));
  std::vector<Element> neg;
  for (auto x : sets.a) neg.push_back(g->inv(x));
  return NearFactorization(g, make_set(std::move(neg)), sets.b);
}

bool has_wraparound_ap(const FiniteGroup& group, std::span<const Element> set, std::size_t length) {
  if (group.id().family != GroupFamily::CyclicZ) throw CapabilityError("arithmetic progressions need a cyclic group");
  auto m = group.order();
  if (length == 0) return true;
  if (set.size() < length || length > m) return false;
  if (length == 1) return true;
  std::vector<bool> in(m, false);
  for (auto x : set) {
    group.check(x);
    in[x.code] = true;
  }
  for (auto x : set) {
    for (std::size_t d = 1; d < m; ++d) {
      // Terms are distinct iff the additive order of d is at least length.
      if (m / std::gcd(m, d) < length) continue;
      std::size_t t = 1;
      while (t < length && in[(x.code + t * d) % m]) ++t;
      if (t == length) return true;
    }
  }
  return false;
}

}  // namespace nearfac
