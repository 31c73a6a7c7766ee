#pragma once

#include <cstdint>
#include <string>

#include "nearfac/near_factorization.hpp"

namespace nearfac {

// Z_2n -> Z_2 x Z_n -> D_n for odd n > 2. phi is the CRT isomorphism and
// psi the relabeling (i, j) -> a^i b^j, which is only a bijection of sets.
class PecherContext {
 public:
  explicit PecherContext(std::uint32_t n);  // DomainError for even n or n < 3

  std::uint32_t n() const { return n_; }
  const GroupPtr& cyclic() const { return cyclic_; }
  const GroupPtr& dihedral() const { return dihedral_; }
  const GroupPtr& product() const { return product_; }

  std::int64_t d1() const { return (n_ + 1) / 2; }
  std::int64_t d2() const { return -1; }

  Element phi(Element x) const;      // Z_2n -> Z2xZn
  Element phi_inv(Element p) const;  // n d2 i + 2 d1 j mod 2n
  Element psi(Element p) const;      // Z2xZn -> D_n
  Element psi_inv(Element x) const;

  Element forward(Element x) const { return psi(phi(x)); }
  Element inverse(Element x) const { return phi_inv(psi_inv(x)); }

 private:
  std::uint32_t n_;
  GroupPtr cyclic_;
  GroupPtr dihedral_;
  GroupPtr product_;
};

// Symmetric NF of Z_2n to a strongly symmetric NF of D_n.
// PreconditionError if the input is not a symmetric NF; DomainError for even n.
NearFactorization pecher_forward(const NearFactorization& nf);
// Strongly symmetric NF of D_n back to a symmetric NF of Z_2n.
NearFactorization pecher_inverse(const NearFactorization& nf);

struct GcdConditions {
  bool ok = false;
  std::uint32_t g1 = 0;  // gcd(n, (k+1)/2)
  std::uint32_t g2 = 0;  // gcd(n, (l+1)/2)
};

GcdConditions check_gcd_conditions(std::uint32_t n, std::uint32_t k, std::uint32_t l);

struct TransportResult {
  EquivalenceMap map;
  bool verified = false;  // the map carries the first transformed NF onto the second
  std::string tag;        // "unproven-equivalence-transport" when the gcd conditions fail
};

// Witness x -> rx + h between symmetric NFs of Z_2n (h in {0, n}) to
// (f_{r mod n, 0}, e or a) on D_n. InvariantViolation for any other h.
TransportResult equivalence_transport_forward(const NearFactorization& nf1, const NearFactorization& nf2,
                                              const EquivalenceMap& witness);

// Witness (f_{i,j}, h) between strongly symmetric NFs of D_n to a witness
// between their inverse transforms. Under the gcd conditions h is e or a and
// j = 0, giving x -> rx + {0 or n} with r = i or i + n (odd). Otherwise the
// images are compared by full search and the result is tagged.
TransportResult equivalence_transport_inverse(const NearFactorization& nf1, const NearFactorization& nf2,
                                              const EquivalenceMap& witness);

inline constexpr const char* kUnprovenTransport = "unproven-equivalence-transport";

}  // namespace nearfac
