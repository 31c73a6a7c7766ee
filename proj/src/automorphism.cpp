#include "nearfac/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "nearfac/errors.hpp"

namespace nearfac {

namespace {

std::vector<Element> identity_table(const FiniteGroup& g) { return g.elements(); }

std::vector<Element> unit_table(const FiniteGroup& g, std::uint32_t r) {
  std::vector<Element> t(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    t[x] = Element{static_cast<std::uint32_t>((static_cast<std::uint64_t>(r) * x) % g.order())};
  }
  return t;
}

std::uint32_t dihedral_image(std::uint32_t n, DihedralForm f, std::uint32_t code) {
  std::uint64_t e = code / n, h = code % n;
  return static_cast<std::uint32_t>(e * n + (f.j * e + static_cast<std::uint64_t>(f.i) * h) % n);
}

std::uint32_t unit_image(std::uint32_t m, UnitForm f, std::uint32_t x) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(f.r) * x) % m);
}

void require_dihedral_params(const FiniteGroup& g, std::uint32_t i, std::uint32_t j) {
  auto n = g.modulus();
  if (i >= n || j >= n || gcd_u(i, n) != 1) {
    throw DomainError("f_{" + std::to_string(i) + "," + std::to_string(j) + "} is not an automorphism of " +
                      g.name() + " (need gcd(i,n) = 1 and 0 <= i,j < n)");
  }
}

std::string describe_component(const ComponentForm& c) {
  if (auto d = std::get_if<DihedralForm>(&c)) {
    return "f_{" + std::to_string(d->i) + "," + std::to_string(d->j) + "}";
  }
  return "x->x^" + std::to_string(std::get<UnitForm>(c).r);
}

}  // namespace

std::vector<Element> dihedral_table(const FiniteGroup& group, std::uint32_t i, std::uint32_t j) {
  if (!group.is_dihedral()) throw CapabilityError(group.name() + " is not dihedral");
  std::vector<Element> t(group.order());
  auto n = group.modulus();
  for (std::uint32_t e = 0; e < 2; ++e) {
    for (std::uint32_t h = 0; h < n; ++h) {
      t[e * n + h] = Element{e * n + static_cast<std::uint32_t>((static_cast<std::uint64_t>(j) * e +
                                                                 static_cast<std::uint64_t>(i) * h) % n)};
    }
  }
  return t;
}

bool is_automorphism(const FiniteGroup& group, std::span<const Element> table) {
  auto n = group.order();
  if (table.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto y : table) {
    if (y.code >= n || hit[y.code]) return false;
    hit[y.code] = true;
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      auto xy = group.mul_unchecked(Element{x}, Element{y});
      if (table[xy.code] != group.mul_unchecked(table[x], table[y])) return false;
    }
  }
  return true;
}

Automorphism::Automorphism(GroupPtr group, AutomorphismForm form, std::vector<Element> table)
    : group_(std::move(group)), form_(std::move(form)), table_(std::move(table)) {}

Automorphism Automorphism::identity(GroupPtr group) {
  AutomorphismForm form = TableForm{};
  switch (group->id().family) {
    case GroupFamily::CyclicZ: form = UnitForm{1}; break;
    case GroupFamily::DihedralD: form = DihedralForm{1, 0}; break;
    case GroupFamily::DirectZ2Zn: form = ProductForm{{UnitForm{1}, UnitForm{1}}}; break;
    case GroupFamily::DirectD5C5: form = ProductForm{{DihedralForm{1, 0}, UnitForm{1}}}; break;
    case GroupFamily::SemidirectC5sqC2: break;
  }
  auto table = identity_table(*group);
  return Automorphism(std::move(group), std::move(form), std::move(table));
}

Automorphism Automorphism::dihedral(GroupPtr group, std::uint32_t i, std::uint32_t j) {
  if (!group->is_dihedral()) throw CapabilityError("f_{i,j} is defined on dihedral groups only");
  require_dihedral_params(*group, i, j);
  auto table = dihedral_table(*group, i, j);
  return Automorphism(std::move(group), DihedralForm{i, j}, std::move(table));
}

Automorphism Automorphism::unit(GroupPtr group, std::uint32_t r) {
  if (group->id().family != GroupFamily::CyclicZ) {
    throw CapabilityError("x -> rx is defined here for Z_n only; use product() for direct products");
  }
  auto m = static_cast<std::uint32_t>(group->order());
  r %= m;
  if (m > 1 && gcd_u(r, m) != 1) {
    throw DomainError(std::to_string(r) + " is not a unit modulo " + std::to_string(m));
  }
  auto table = unit_table(*group, r);
  return Automorphism(std::move(group), UnitForm{r}, std::move(table));
}

Automorphism Automorphism::product(GroupPtr group, ProductForm form) {
  const auto& g = *group;
  std::vector<Element> table(g.order());
  switch (g.id().family) {
    case GroupFamily::DirectZ2Zn: {
      if (form.components.size() != 2 || !std::holds_alternative<UnitForm>(form.components[0]) ||
          !std::holds_alternative<UnitForm>(form.components[1])) {
        throw DomainError("Z2xZn automorphism needs two unit components");
      }
      auto n = g.modulus();
      auto r2 = std::get<UnitForm>(form.components[0]).r % 2;
      auto rn = std::get<UnitForm>(form.components[1]).r % n;
      if (r2 != 1 || (n > 1 && gcd_u(rn, n) != 1)) throw DomainError("component is not a unit");
      for (std::uint32_t x = 0; x < g.order(); ++x) {
        table[x] = Element{(x / n) * n + unit_image(n, UnitForm{rn}, x % n)};
      }
      form.components = {UnitForm{1}, UnitForm{rn}};
      break;
    }
    case GroupFamily::DirectD5C5: {
      if (form.components.size() != 2 || !std::holds_alternative<DihedralForm>(form.components[0]) ||
          !std::holds_alternative<UnitForm>(form.components[1])) {
        throw DomainError("D5xC5 automorphism needs (f_{i,j}, x->x^r)");
      }
      auto d = std::get<DihedralForm>(form.components[0]);
      auto u = std::get<UnitForm>(form.components[1]);
      if (d.i >= 5 || d.j >= 5 || gcd_u(d.i, 5) != 1 || u.r % 5 == 0) {
        throw DomainError("invalid component parameters for D5xC5 automorphism");
      }
      u.r %= 5;
      for (std::uint32_t x = 0; x < 50; ++x) {
        table[x] = Element{5 * dihedral_image(5, d, x / 5) + unit_image(5, u, x % 5)};
      }
      form.components = {d, u};
      break;
    }
    default: throw CapabilityError(g.name() + " is not a supported direct product");
  }
  return Automorphism(std::move(group), std::move(form), std::move(table));
}

Automorphism Automorphism::from_table(GroupPtr group, std::vector<Element> table) {
  if (!is_automorphism(*group, table)) {
    throw DomainError("table does not define an automorphism of " + group->name());
  }
  return Automorphism(std::move(group), TableForm{}, std::move(table));
}

Automorphism Automorphism::from_generator_images(GroupPtr group, std::span<const Element> images) {
  const auto& g = *group;
  const auto& gens = g.generators();
  if (images.size() != gens.size()) throw DomainError("wrong number of generator images");
  for (auto y : images) g.check(y);
  // Breadth-first over the Cayley graph: x s -> f(x) f(s).
  std::vector<Element> table(g.order(), Element{0});
  std::vector<bool> known(g.order(), false);
  known[0] = true;
  std::deque<Element> queue{g.identity()};
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < gens.size(); ++s) {
      auto xs = g.mul_unchecked(x, gens[s]);
      auto image = g.mul_unchecked(table[x.code], images[s]);
      if (known[xs.code]) {
        if (table[xs.code] != image) throw DomainError("generator images violate a relation of " + g.name());
      } else {
        known[xs.code] = true;
        table[xs.code] = image;
        queue.push_back(xs);
      }
    }
  }
  return from_table(std::move(group), std::move(table));
}

ElementSet Automorphism::apply(std::span<const Element> set) const {
  std::vector<Element> out;
  out.reserve(set.size());
  for (auto x : set) {
    group_->check(x);
    out.push_back(table_[x.code]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Automorphism::is_identity() const {
  for (std::uint32_t x = 0; x < table_.size(); ++x) {
    if (table_[x].code != x) return false;
  }
  return true;
}

std::string Automorphism::describe() const {
  if (auto d = std::get_if<DihedralForm>(&form_)) return describe_component(*d);
  if (auto u = std::get_if<UnitForm>(&form_)) return "x->" + std::to_string(u->r) + "x";
  if (auto p = std::get_if<ProductForm>(&form_)) {
    std::string s = "(";
    for (std::size_t c = 0; c < p->components.size(); ++c) {
      if (c) s += ", ";
      if (group_->id().family == GroupFamily::DirectZ2Zn) {
        s += "x->" + std::to_string(std::get<UnitForm>(p->components[c]).r) + "x";
      } else {
        s += describe_component(p->components[c]);
      }
    }
    return s + ")";
  }
  std::string s = "{";
  const auto& names = group_->generator_names();
  const auto& gens = group_->generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k) s += ", ";
    s += names[k] + "->" + group_->render(table_[gens[k].code]);
  }
  return s + "}";
}

Automorphism compose(const Automorphism& first, const Automorphism& second) {
  if (first.group_ != second.group_ && first.group_->id() != second.group_->id()) {
    throw DomainError("cannot compose automorphisms of different groups");
  }
  std::vector<Element> table(first.table_.size());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = second.table_[first.table_[x].code];

  const auto& g = *first.group_;
  auto n = g.modulus();
  auto compose_component = [](const ComponentForm& a, const ComponentForm& b, std::uint32_t m) -> ComponentForm {
    if (auto da = std::get_if<DihedralForm>(&a)) {
      auto db = std::get<DihedralForm>(b);
      // f_{i,j} then f_{i',j'}: a b^h -> a b^{j + ih} -> a b^{j' + i'(j + ih)}.
      return DihedralForm{static_cast<std::uint32_t>((static_cast<std::uint64_t>(da->i) * db.i) % m),
                          static_cast<std::uint32_t>((db.j + static_cast<std::uint64_t>(da->j) * db.i) % m)};
    }
    return UnitForm{static_cast<std::uint32_t>((static_cast<std::uint64_t>(std::get<UnitForm>(a).r) *
                                                std::get<UnitForm>(b).r) % m)};
  };

  AutomorphismForm form = TableForm{};
  auto d1 = std::get_if<DihedralForm>(&first.form_);
  auto d2 = std::get_if<DihedralForm>(&second.form_);
  auto u1 = std::get_if<UnitForm>(&first.form_);
  auto u2 = std::get_if<UnitForm>(&second.form_);
  if (d1 && d2) {
    form = std::get<DihedralForm>(compose_component(*d1, *d2, n));
  } else if (u1 && u2) {
    form = std::get<UnitForm>(compose_component(*u1, *u2, static_cast<std::uint32_t>(g.order())));
  } else if (std::holds_alternative<ProductForm>(first.form_) && std::holds_alternative<ProductForm>(second.form_)) {
    const auto& pa = std::get<ProductForm>(first.form_).components;
    const auto& pb = std::get<ProductForm>(second.form_).components;
    ProductForm p;
    std::vector<std::uint32_t> moduli = g.id().family == GroupFamily::DirectZ2Zn
                                            ? std::vector<std::uint32_t>{2, n}
                                            : std::vector<std::uint32_t>{5, 5};
    for (std::size_t c = 0; c < pa.size(); ++c) p.components.push_back(compose_component(pa[c], pb[c], moduli[c]));
    form = std::move(p);
  }
  return Automorphism(first.group_, std::move(form), std::move(table));
}

Automorphism aut_inverse(const Automorphism& f) {
  std::vector<Element> table(f.table_.size());
  for (std::uint32_t x = 0; x < table.size(); ++x) table[f.table_[x].code] = Element{x};

  const auto& g = *f.group_;
  auto invert_component = [](const ComponentForm& c, std::uint32_t m) -> ComponentForm {
    if (auto d = std::get_if<DihedralForm>(&c)) {
      auto ii = inverse_mod(d->i, m);
      return DihedralForm{ii, static_cast<std::uint32_t>(mod(-static_cast<std::int64_t>(ii) * d->j, m))};
    }
    return UnitForm{inverse_mod(std::get<UnitForm>(c).r, m)};
  };

  AutomorphismForm form = TableForm{};
  if (auto d = std::get_if<DihedralForm>(&f.form_)) {
    form = std::get<DihedralForm>(invert_component(*d, g.modulus()));
  } else if (auto u = std::get_if<UnitForm>(&f.form_)) {
    form = std::get<UnitForm>(invert_component(*u, static_cast<std::uint32_t>(g.order())));
  } else if (auto p = std::get_if<ProductForm>(&f.form_)) {
    ProductForm q;
    std::vector<std::uint32_t> moduli = g.id().family == GroupFamily::DirectZ2Zn
                                            ? std::vector<std::uint32_t>{2, g.modulus()}
                                            : std::vector<std::uint32_t>{5, 5};
    for (std::size_t c = 0; c < p->components.size(); ++c) {
      q.components.push_back(invert_component(p->components[c], moduli[c]));
    }
    form = std::move(q);
  }
  return Automorphism(f.group_, std::move(form), std::move(table));
}

}  // namespace nearfac
