#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nearfac/near_factorization.hpp"

namespace nearfac {

// D(B, A) = {y - x : y in B, x in A} with multiplicity, as a sorted list.
// CapabilityError for nonabelian groups.
std::vector<Element> external_differences(const FiniteGroup& group, std::span<const Element> b,
                                          std::span<const Element> a);

// An (n, m; l_1..l_m; lambda_1..lambda_m)-GSEDF candidate.
struct GsedfInstance {
  GroupPtr group;
  std::vector<ElementSet> sets;
  std::vector<std::uint32_t> lambdas;

  std::vector<std::uint32_t> ells() const;
};

struct GsedfReport {
  bool ok = false;
  std::string reason;
};

// Disjointness, then for each i: the union over j != i of D(A_i, A_j) equals
// lambda_i copies of G - 0.
GsedfReport check_gsedf(const GsedfInstance& inst);
bool verify_gsedf(const GsedfInstance& inst);

// (A, B) -> sets (-A, B) with lambdas (1, 1).
GsedfInstance nf_to_gsedf(const NearFactorization& nf);
// Sets (A1, A2) with lambdas (1, 1) -> (-A1, A2). DomainError for other shapes.
NearFactorization gsedf_to_nf(const GsedfInstance& inst);

}  // namespace nearfac
