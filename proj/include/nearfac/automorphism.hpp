#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "nearfac/group.hpp"

namespace nearfac {

// f_{i,j}: b -> b^i, a -> a b^j.
struct DihedralForm {
  std::uint32_t i = 1;
  std::uint32_t j = 0;
  friend bool operator==(const DihedralForm&, const DihedralForm&) = default;
};

// x -> r x on Z_m (written x -> x^r on C_m).
struct UnitForm {
  std::uint32_t r = 1;
  friend bool operator==(const UnitForm&, const UnitForm&) = default;
};

using ComponentForm = std::variant<DihedralForm, UnitForm>;

// Componentwise automorphism of a direct product.
struct ProductForm {
  std::vector<ComponentForm> components;
  friend bool operator==(const ProductForm&, const ProductForm&) = default;
};

// No closed form; only the permutation table is meaningful.
struct TableForm {
  friend bool operator==(const TableForm&, const TableForm&) = default;
};

using AutomorphismForm = std::variant<DihedralForm, UnitForm, ProductForm, TableForm>;

// An automorphism of a FiniteGroup. The permutation table of codes is always
// materialized and is the ground truth; the form is a label that, when not
// TableForm, is guaranteed to induce the same table.
class Automorphism {
 public:
  static Automorphism identity(GroupPtr group);
  static Automorphism dihedral(GroupPtr group, std::uint32_t i, std::uint32_t j);
  static Automorphism unit(GroupPtr group, std::uint32_t r);
  static Automorphism product(GroupPtr group, ProductForm form);
  // Validates bijectivity and the homomorphism law; DomainError otherwise.
  static Automorphism from_table(GroupPtr group, std::vector<Element> table);
  // Extends generator images (in FiniteGroup::generators() order) to the
  // whole group. DomainError if they do not define an automorphism.
  static Automorphism from_generator_images(GroupPtr group, std::span<const Element> images);

  Element operator()(Element x) const { return table_[x.code]; }
  ElementSet apply(std::span<const Element> set) const;

  const GroupPtr& group() const { return group_; }
  const AutomorphismForm& form() const { return form_; }
  std::span<const Element> table() const { return table_; }
  bool is_identity() const;

  // "f_{21,0}", "x->7x", "(f_{1,0}, x->x^2)", or generator images for tables.
  std::string describe() const;

  friend bool operator==(const Automorphism& f, const Automorphism& g) {
    return f.table_ == g.table_;
  }

 private:
  Automorphism(GroupPtr group, AutomorphismForm form, std::vector<Element> table);

  friend Automorphism compose(const Automorphism&, const Automorphism&);
  friend Automorphism aut_inverse(const Automorphism&);

  GroupPtr group_;
  AutomorphismForm form_;
  std::vector<Element> table_;
};

// Apply `first`, then `second`: result(x) = second(first(x)). For dihedral
// forms this is f_{i,j} then f_{i',j'} = f_{ii', j' + j i'} (mod n), which is
// what the table composition produces.
Automorphism compose(const Automorphism& first, const Automorphism& second);
Automorphism aut_inverse(const Automorphism& f);

// Full |G|^2 check of bijectivity and f(xy) = f(x) f(y).
bool is_automorphism(const FiniteGroup& group, std::span<const Element> table);

// Table of f_{i,j} on D_n computed straight from the defining formula
// f(a^e b^h) = a^e b^{je + ih}.
std::vector<Element> dihedral_table(const FiniteGroup& group, std::uint32_t i, std::uint32_t j);

}  // namespace nearfac
