#include "nearfac/near_factorization.hpp"

#include <algorithm>
#include <sstream>

#include "nearfac/errors.hpp"

namespace nearfac {

namespace {

void require_same_group(const FiniteGroup& g1, const FiniteGroup& g2) {
  if (&g1 != &g2 && g1.id() != g2.id()) {
    throw DomainError("group mismatch: " + g1.name() + " vs " + g2.name());
  }
}

ElementSet right_translate(const FiniteGroup& g, const Automorphism& f, std::span<const Element> set, Element h) {
  ElementSet out;
  out.reserve(set.size());
  for (auto x : set) out.push_back(g.mul_unchecked(f(x), h));
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet left_translate(const FiniteGroup& g, const Automorphism& f, std::span<const Element> set, Element h) {
  ElementSet out;
  out.reserve(set.size());
  for (auto x : set) out.push_back(g.mul_unchecked(h, f(x)));
  std::sort(out.begin(), out.end());
  return out;
}

void check_set(const FiniteGroup& g, std::span<const Element> set) {
  for (auto x : set) g.check(x);
}

}  // namespace

NearFactorization::NearFactorization(GroupPtr group, ElementSet a, ElementSet b)
    : group_(std::move(group)), a_(make_set(std::move(a))), b_(make_set(std::move(b))) {
  check_set(*group_, a_);
  check_set(*group_, b_);
}

NearFactorization::NearFactorization(GroupPtr group, std::span<const std::uint32_t> a,
                                     std::span<const std::uint32_t> b)
    : NearFactorization(std::move(group), codes_to_set(a), codes_to_set(b)) {}

std::vector<std::uint32_t> NearFactorization::key() const {
  auto k = set_codes(a_);
  for (auto x : b_) k.push_back(x.code);
  return k;
}

std::string NearFactorization::to_string() const {
  std::ostringstream os;
  auto put = [&](const ElementSet& s) {
    os << "{";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << group_->render(s[i]);
    os << "}";
  };
  os << group_->name() << " (";
  put(a_);
  os << ", ";
  put(b_);
  os << ")";
  return os.str();
}

VerificationReport verify(const NearFactorization& nf) {
  const auto& g = *nf.group();
  VerificationReport report;
  std::vector<std::size_t> count(g.order(), 0);
  for (auto x : nf.a()) {
    for (auto y : nf.b()) ++count[g.mul_unchecked(x, y).code];
  }
  report.identity_representations = count[0];
  for (std::uint32_t c = 1; c < g.order(); ++c) {
    if (count[c] == 0) report.uncovered.push_back(Element{c});
    if (count[c] > 1) report.multiply_covered.emplace_back(Element{c}, count[c]);
  }
  if (nf.k() * nf.l() != g.order() - 1) {
    report.reason = "|A||B| = " + std::to_string(nf.k() * nf.l()) + " but |G| - 1 = " + std::to_string(g.order() - 1);
  } else if (report.identity_representations > 0) {
    report.reason = "identity is a product of A and B";
  } else if (!report.uncovered.empty() || !report.multiply_covered.empty()) {
    report.reason = "AB does not cover G - e exactly once";
  } else {
    report.is_nf = true;
  }
  return report;
}

bool is_symmetric(const FiniteGroup& group, std::span<const Element> set) {
  check_set(group, set);
  for (auto x : set) {
    if (!std::binary_search(set.begin(), set.end(), group.inv_unchecked(x))) return false;
  }
  return true;
}

bool is_symmetric(const NearFactorization& nf) {
  return is_symmetric(*nf.group(), nf.a()) && is_symmetric(*nf.group(), nf.b());
}

bool is_strongly_symmetric(const FiniteGroup& group, std::span<const Element> set) {
  if (!group.is_dihedral()) throw CapabilityError("strong symmetry is defined for dihedral groups only");
  check_set(group, set);
  auto n = group.modulus();
  for (auto x : set) {
    Element mirror{(x.code / n) * n + static_cast<std::uint32_t>(mod(-static_cast<std::int64_t>(x.code % n), n))};
    if (!std::binary_search(set.begin(), set.end(), mirror)) return false;
  }
  return true;
}

bool is_strongly_symmetric(const NearFactorization& nf) {
  return is_strongly_symmetric(*nf.group(), nf.a()) && is_strongly_symmetric(*nf.group(), nf.b());
}

RotationProfile rotation_profile(const NearFactorization& nf) {
  const auto& g = *nf.group();
  if (!g.is_dihedral()) throw CapabilityError("rotation profile is defined for dihedral groups only");
  RotationProfile p;
  for (auto x : nf.a()) p.rotations_a += g.is_rotation(x);
  for (auto x : nf.b()) p.rotations_b += g.is_rotation(x);
  auto k = nf.k(), l = nf.l();
  if (k % 2 == 1 && l % 2 == 1) {
    if (2 * p.rotations_a + 1 == k && 2 * p.rotations_b == l + 1) {
      p.which = RotationCase::I;
      return p;
    }
    if (2 * p.rotations_a == k + 1 && 2 * p.rotations_b + 1 == l) {
      p.which = RotationCase::II;
      return p;
    }
  }
  throw InvariantViolation("rotation counts (" + std::to_string(p.rotations_a) + ", " +
                           std::to_string(p.rotations_b) + ") match neither case for " + nf.to_string());
}

// ---------------------------------------------------------------- maps

std::string EquivalenceMap::describe() const { return f.describe() + ", " + f.group()->render(h); }

EquivalenceMap identity_map(const GroupPtr& group) {
  return EquivalenceMap{Automorphism::identity(group), group->identity()};
}

NearFactorization apply_map(const EquivalenceMap& m, const NearFactorization& nf) {
  require_same_group(*m.f.group(), *nf.group());
  const auto& g = *nf.group();
  g.check(m.h);
  auto hinv = g.inv_unchecked(m.h);
  return NearFactorization(nf.group(), right_translate(g, m.f, nf.a(), m.h), left_translate(g, m.f, nf.b(), hinv));
}

EquivalenceMap invert_map(const EquivalenceMap& m) {
  const auto& g = *m.f.group();
  auto finv = aut_inverse(m.f);
  auto h = finv(g.inv(m.h));
  return EquivalenceMap{std::move(finv), h};
}

EquivalenceMap compose_maps(const EquivalenceMap& first, const EquivalenceMap& second) {
  require_same_group(*first.f.group(), *second.f.group());
  // g(f(A) h) k = (f then g)(A) g(h) k
  const auto& g = *first.f.group();
  return EquivalenceMap{compose(first.f, second.f), g.mul(second.f(first.h), second.h)};
}

bool same_action(const EquivalenceMap& m1, const EquivalenceMap& m2) { return m1.f == m2.f && m1.h == m2.h; }

// ---------------------------------------------------------------- canonical forms

CanonicalResult canonicalize(const NearFactorization& nf) {
  const auto& g = *nf.group();
  const auto& auts = g.automorphisms();
  // Some h puts e into f(A) h, and any such image beats one without e, so
  // only h in f(A)^-1 needs to be tried.
  std::optional<NearFactorization> best;
  std::size_t best_f = 0;
  Element best_h{};
  ElementSet fa(nf.k()), cand(nf.k()), cand_b(nf.l());
  for (std::size_t fi = 0; fi < auts.size(); ++fi) {
    const auto& f = auts[fi];
    for (std::size_t t = 0; t < nf.k(); ++t) fa[t] = f(nf.a()[t]);
    for (auto x : fa) {
      auto h = g.inv_unchecked(x);
      for (std::size_t t = 0; t < fa.size(); ++t) cand[t] = g.mul_unchecked(fa[t], h);
      std::sort(cand.begin(), cand.end());
      if (best) {
        auto cmp = cand <=> best->a();
        if (cmp > 0) continue;
        auto hinv = g.inv_unchecked(h);
        for (std::size_t t = 0; t < nf.l(); ++t) cand_b[t] = g.mul_unchecked(hinv, f(nf.b()[t]));
        std::sort(cand_b.begin(), cand_b.end());
        if (cmp == 0 && !(cand_b < best->b())) continue;
      } else {
        auto hinv = g.inv_unchecked(h);
        for (std::size_t t = 0; t < nf.l(); ++t) cand_b[t] = g.mul_unchecked(hinv, f(nf.b()[t]));
        std::sort(cand_b.begin(), cand_b.end());
      }
      best.emplace(nf.group(), cand, cand_b);
      best_f = fi;
      best_h = h;
    }
  }
  if (!best) {
    // A is empty; only possible for malformed input.
    return CanonicalResult{nf, identity_map(nf.group())};
  }
  return CanonicalResult{std::move(*best), EquivalenceMap{auts[best_f], best_h}};
}

NearFactorization canonical_form(const NearFactorization& nf) { return canonicalize(nf).form; }

std::vector<EquivalenceMap> all_witnesses(const NearFactorization& nf1, const NearFactorization& nf2) {
  require_same_group(*nf1.group(), *nf2.group());
  std::vector<EquivalenceMap> out;
  if (nf1.k() != nf2.k() || nf1.l() != nf2.l() || nf1.k() == 0) return out;
  const auto& g = *nf1.group();
  const auto& auts = g.automorphisms();
  auto target = nf2.a().front();
  std::vector<std::pair<std::uint32_t, std::size_t>> found;  // (h code, f index)
  for (std::size_t fi = 0; fi < auts.size(); ++fi) {
    const auto& f = auts[fi];
    // f(A) h contains min(A') so h = f(x)^-1 min(A') for some x in A.
    for (auto x : nf1.a()) {
      auto h = g.mul_unchecked(g.inv_unchecked(f(x)), target);
      EquivalenceMap m{f, h};
      if (apply_map(m, nf1) == nf2) found.emplace_back(h.code, fi);
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (auto [h, fi] : found) out.push_back(EquivalenceMap{auts[fi], Element{h}});
  return out;
}

std::optional<EquivalenceWitness> are_equivalent(const NearFactorization& nf1, const NearFactorization& nf2) {
  require_same_group(*nf1.group(), *nf2.group());
  if (nf1.k() != nf2.k() || nf1.l() != nf2.l()) return std::nullopt;
  if (!(canonical_form(nf1) == canonical_form(nf2))) return std::nullopt;
  auto witnesses = all_witnesses(nf1, nf2);
  if (witnesses.empty()) {
    throw InvariantViolation("equal canonical forms but no witness between " + nf1.to_string() + " and " +
                             nf2.to_string());
  }
  EquivalenceWitness w{witnesses.front(), false};
  w.verified = apply_map(w.map, nf1) == nf2;
  return w;
}

Element symmetrizing_translate(const NearFactorization& nf) {
  const auto& g = *nf.group();
  if (!g.is_abelian()) throw CapabilityError("symmetrizing translate needs an abelian group");
  auto identity = Automorphism::identity(nf.group());
  for (auto x : g.elements()) {
    // (A + g, B - g) in additive notation is Phi_{id, g}.
    auto image = apply_map(EquivalenceMap{identity, x}, nf);
    if (is_symmetric(image)) return x;
  }
  throw InvariantViolation("no symmetric translate of " + nf.to_string());
}

NearFactorization inverse_pair(const NearFactorization& nf) {
  const auto& g = *nf.group();
  std::vector<Element> a, b;
  for (auto y : nf.b()) a.push_back(g.inv_unchecked(y));
  for (auto x : nf.a()) b.push_back(g.inv_unchecked(x));
  return NearFactorization(nf.group(), make_set(std::move(a)), make_set(std::move(b)));
}

}  // namespace nearfac
