#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nearfac {

class Automorphism;

enum class GroupFamily {
  CyclicZ,            // Z_n
  DihedralD,          // D_n, order 2n
  DirectZ2Zn,         // Z_2 x Z_n
  DirectD5C5,         // D_5 x C_5
  SemidirectC5sqC2,   // C_5^2 semidirect C_2, a inverts b and c
};

// Group descriptor. The textual form is "Z:16", "D:8", "Z2xZ:5", "D5xC5"
// or "C5sqC2".
struct GroupId {
  GroupFamily family = GroupFamily::CyclicZ;
  std::vector<std::uint32_t> params;

  static GroupId cyclic(std::uint32_t n);
  static GroupId dihedral(std::uint32_t n);
  static GroupId z2_times_zn(std::uint32_t n);
  static GroupId d5_times_c5();
  static GroupId c5sq_c2();

  static GroupId parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const GroupId&, const GroupId&) = default;
};

// An element, identified by its integer code in [0, |G|). The code of the
// identity is 0 in every family. Encodings:
//   Z_n      x
//   D_n      e*n + h           for a^e b^h
//   Z2xZn    i*n + j           for (i, j)
//   D5xC5    5*(5e + h) + k    for (a^e b^h, c^k)
//   C5sqC2   25e + 5i + j      for a^e b^i c^j
struct Element {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

// Sorted, duplicate-free. Ascending code order is the element order used for
// every lexicographic comparison in the library.
using ElementSet = std::vector<Element>;

ElementSet make_set(std::vector<Element> elements);  // sorts; throws on duplicates
ElementSet codes_to_set(std::span<const std::uint32_t> codes);
std::vector<std::uint32_t> set_codes(std::span<const Element> set);

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Cayley-table backed finite group. Immutable after construction except for
// the lazily materialized automorphism list, which is built once under
// std::call_once.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  explicit FiniteGroup(GroupId id);
  ~FiniteGroup();

  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  const GroupId& id() const { return id_; }
  std::string name() const { return id_.to_string(); }
  std::size_t order() const { return order_; }
  Element identity() const { return Element{0}; }

  bool contains(Element x) const { return x.code < order_; }
  void check(Element x) const;

  Element mul(Element x, Element y) const;
  Element inv(Element x) const;

  Element mul_unchecked(Element x, Element y) const {
    return table_[static_cast<std::size_t>(x.code) * order_ + y.code];
  }
  Element inv_unchecked(Element x) const { return inverse_[x.code]; }

  std::vector<Element> elements() const;
  std::uint32_t element_order(Element x) const;
  bool is_abelian() const { return abelian_; }

  bool is_dihedral() const { return id_.family == GroupFamily::DihedralD; }
  // n for D_n, Z_n and Z2xZn; 5 for the two order-50 families.
  std::uint32_t modulus() const { return modulus_; }

  // Named generators, in the order used by describe() and
  // Automorphism::from_generator_images.
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }

  std::string render(Element x) const;
  Element parse_element(std::string_view text) const;

  // Dihedral helpers; throw CapabilityError for other families.
  Element rotation(std::int64_t j) const;
  Element reflection(std::int64_t j) const;
  bool is_rotation(Element x) const;
  std::uint32_t exponent(Element x) const;  // h in a^e b^h

  // Every automorphism exactly once, in a fixed order:
  //   D_n     f_{i,j}, i ascending over units, then j ascending
  //   Z_n     x -> rx, r ascending over units
  //   Z2xZn   (id, x -> rx), n odd only
  //   D5xC5   (f_{i,j}, x -> x^r), dihedral part outer
  //   C5sqC2  closure of four published generators, breadth-first order
  const std::vector<Automorphism>& automorphisms() const;

 private:
  Element parse_word(std::string_view text) const;
  Element from_tuple(std::string_view text) const;

  GroupId id_;
  std::size_t order_ = 0;
  std::uint32_t modulus_ = 0;
  bool abelian_ = false;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<Element> generators_;
  std::vector<std::string> generator_names_;

  mutable std::once_flag automorphisms_once_;
  mutable std::unique_ptr<std::vector<Automorphism>> automorphisms_;
};

// Shared, cached instance per descriptor. Safe to call from several threads.
GroupPtr make_group(const GroupId& id);
GroupPtr make_group(std::string_view descriptor);

// Helpers shared by several modules.
std::int64_t mod(std::int64_t x, std::int64_t m);
std::uint32_t gcd_u(std::uint32_t a, std::uint32_t b);
std::uint32_t inverse_mod(std::uint32_t x, std::uint32_t m);  // throws if not a unit
std::vector<std::uint32_t> units_mod(std::uint32_t m);
std::uint32_t euler_phi(std::uint32_t m);

}  // namespace nearfac

template <>
struct std::hash<nearfac::Element> {
  std::size_t operator()(nearfac::Element x) const noexcept { return x.code; }
};
