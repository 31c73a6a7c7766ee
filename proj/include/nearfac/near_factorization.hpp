#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nearfac/automorphism.hpp"
#include "nearfac/group.hpp"

namespace nearfac {

// An ordered pair (A, B) of element sets of one group. The sets are kept
// sorted and duplicate-free; |A| |B| = |G| - 1 is not enforced here, verify()
// reports it.
class NearFactorization {
 public:
  NearFactorization(GroupPtr group, ElementSet a, ElementSet b);
  NearFactorization(GroupPtr group, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

  const GroupPtr& group() const { return group_; }
  const ElementSet& a() const { return a_; }
  const ElementSet& b() const { return b_; }
  std::size_t k() const { return a_.size(); }
  std::size_t l() const { return b_.size(); }

  // Code sequence of A followed by B; the key for lexicographic order.
  std::vector<std::uint32_t> key() const;

  friend bool operator==(const NearFactorization& x, const NearFactorization& y) {
    return x.group_->id() == y.group_->id() && x.a_ == y.a_ && x.b_ == y.b_;
  }
  // Lexicographic: A first, then B.
  friend bool operator<(const NearFactorization& x, const NearFactorization& y) {
    return std::tie(x.a_, x.b_) < std::tie(y.a_, y.b_);
  }

  std::string to_string() const;

 private:
  GroupPtr group_;
  ElementSet a_;
  ElementSet b_;
};

struct VerificationReport {
  bool is_nf = false;
  std::string reason;                              // empty when is_nf
  ElementSet uncovered;                            // non-identity elements with no representation
  std::vector<std::pair<Element, std::size_t>> multiply_covered;  // element, number of representations
  std::size_t identity_representations = 0;
};

VerificationReport verify(const NearFactorization& nf);

bool is_symmetric(const FiniteGroup& group, std::span<const Element> set);
bool is_symmetric(const NearFactorization& nf);
// Dihedral only: a^i b^j in X iff a^i b^-j in X.
bool is_strongly_symmetric(const FiniteGroup& group, std::span<const Element> set);
bool is_strongly_symmetric(const NearFactorization& nf);

enum class RotationCase { I, II };  // I: ((k-1)/2, (l+1)/2), II: ((k+1)/2, (l-1)/2)

struct RotationProfile {
  std::size_t rotations_a = 0;
  std::size_t rotations_b = 0;
  RotationCase which = RotationCase::I;
};

RotationProfile rotation_profile(const NearFactorization& nf);

// Phi_{f,h}: (A, B) -> (f(A) h, h^-1 f(B)).
struct EquivalenceMap {
  Automorphism f;
  Element h;

  std::string describe() const;
};

struct EquivalenceWitness {
  EquivalenceMap map;
  bool verified = false;
};

EquivalenceMap identity_map(const GroupPtr& group);
NearFactorization apply_map(const EquivalenceMap& m, const NearFactorization& nf);
EquivalenceMap invert_map(const EquivalenceMap& m);
// Apply `first`, then `second`.
EquivalenceMap compose_maps(const EquivalenceMap& first, const EquivalenceMap& second);
bool same_action(const EquivalenceMap& m1, const EquivalenceMap& m2);

struct CanonicalResult {
  NearFactorization form;
  EquivalenceMap map;  // apply_map(map, input) == form
};

// Lexicographically least image over Aut(G) x G.
CanonicalResult canonicalize(const NearFactorization& nf);
NearFactorization canonical_form(const NearFactorization& nf);

// The least witness in (h by code, then automorphism order) that maps nf1 to
// nf2, or nullopt. Decided by canonical-form comparison first.
std::optional<EquivalenceWitness> are_equivalent(const NearFactorization& nf1, const NearFactorization& nf2);

// Every (f, h) with apply_map(Phi_{f,h}, nf1) == nf2.
std::vector<EquivalenceMap> all_witnesses(const NearFactorization& nf1, const NearFactorization& nf2);

// Abelian groups: least g (by code) with (A + g, B - g) symmetric.
Element symmetrizing_translate(const NearFactorization& nf);

// (A, B) -> (B^-1, A^-1), which is again an NF.
NearFactorization inverse_pair(const NearFactorization& nf);

}  // namespace nearfac
