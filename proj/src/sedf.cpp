#include "nearfac/sedf.hpp"

#include <algorithm>

#include "nearfac/errors.hpp"

namespace nearfac {

namespace {

void require_abelian(const FiniteGroup& g) {
  if (!g.is_abelian()) throw CapabilityError("external differences need an abelian group, got " + g.name());
}

ElementSet negate(const FiniteGroup& g, std::span<const Element> set) {
  std::vector<Element> out;
  for (auto x : set) out.push_back(g.inv(x));
  return make_set(std::move(out));
}

}  // namespace

std::vector<Element> external_differences(const FiniteGroup& group, std::span<const Element> b,
                                          std::span<const Element> a) {
  require_abelian(group);
  std::vector<Element> out;
  out.reserve(a.size() * b.size());
  for (auto y : b) {
    for (auto x : a) out.push_back(group.mul(y, group.inv(x)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> GsedfInstance::ells() const {
  std::vector<std::uint32_t> out;
  for (const auto& s : sets) out.push_back(static_cast<std::uint32_t>(s.size()));
  return out;
}

GsedfReport check_gsedf(const GsedfInstance& inst) {
  if (!inst.group) throw DomainError("GSEDF instance has no group");
  const auto& g = *inst.group;
  require_abelian(g);
  if (inst.sets.size() != inst.lambdas.size()) {
    throw DomainError("GSEDF instance has " + std::to_string(inst.sets.size()) + " sets but " +
                      std::to_string(inst.lambdas.size()) + " lambdas");
  }
  std::vector<int> owner(g.order(), -1);
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    for (auto x : inst.sets[i]) {
      g.check(x);
      if (owner[x.code] >= 0) {
        return {false, "sets " + std::to_string(owner[x.code]) + " and " + std::to_string(i) + " share " + g.render(x)};
      }
      owner[x.code] = static_cast<int>(i);
    }
  }
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    std::vector<std::uint32_t> count(g.order(), 0);
    for (std::size_t j = 0; j < inst.sets.size(); ++j) {
      if (j == i) continue;
      for (auto d : external_differences(g, inst.sets[i], inst.sets[j])) ++count[d.code];
    }
    if (count[0] != 0) return {false, "0 occurs as a difference for set " + std::to_string(i)};
    for (std::uint32_t c = 1; c < g.order(); ++c) {
      if (count[c] != inst.lambdas[i]) {
        return {false, g.render(Element{c}) + " occurs " + std::to_string(count[c]) + " times for set " +
                           std::to_string(i) + ", expected " + std::to_string(inst.lambdas[i])};
      }
    }
  }
  return {true, {}};
}

bool verify_gsedf(const GsedfInstance& inst) { return check_gsedf(inst).ok; }

GsedfInstance nf_to_gsedf(const NearFactorization& nf) {
  const auto& g = *nf.group();
  require_abelian(g);
  return GsedfInstance{nf.group(), {negate(g, nf.a()), nf.b()}, {1, 1}};
}

NearFactorization gsedf_to_nf(const GsedfInstance& inst) {
  if (!inst.group) throw DomainError("GSEDF instance has no group");
  require_abelian(*inst.group);
  if (inst.sets.size() != 2 || inst.lambdas != std::vector<std::uint32_t>{1, 1}) {
    throw DomainError("only (n,2;k,l;1,1)-GSEDFs correspond to near-factorizations");
  }
  return NearFactorization(inst.group, negate(*inst.group, inst.sets[0]), inst.sets[1]);
}

}  // namespace nearfac
