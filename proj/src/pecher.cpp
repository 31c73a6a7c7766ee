#include "nearfac/pecher.hpp"

#include "nearfac/errors.hpp"

namespace nearfac {

PecherContext::PecherContext(std::uint32_t n) : n_(n) {
  if (n < 3 || n % 2 == 0) throw DomainError("Pecher transform needs odd n >= 3, got " + std::to_string(n));
  cyclic_ = make_group(GroupId::cyclic(2 * n));
  dihedral_ = make_group(GroupId::dihedral(n));
  product_ = make_group(GroupId::z2_times_zn(n));
}

Element PecherContext::phi(Element x) const {
  cyclic_->check(x);
  return Element{(x.code % 2) * n_ + x.code % n_};
}

Element PecherContext::phi_inv(Element p) const {
  product_->check(p);
  std::int64_t i = p.code / n_, j = p.code % n_;
  return Element{static_cast<std::uint32_t>(mod(n_ * d2() * i + 2 * d1() * j, 2 * n_))};
}

// Z2xZn and D_n share the layout i*n + j, so psi is the identity on codes.
Element PecherContext::psi(Element p) const {
  product_->check(p);
  return p;
}

Element PecherContext::psi_inv(Element x) const {
  dihedral_->check(x);
  return x;
}

namespace {

std::uint32_t pecher_n_for_cyclic(const FiniteGroup& g) {
  if (g.id().family != GroupFamily::CyclicZ) throw DomainError("Pecher forward needs a cyclic group, got " + g.name());
  auto m = static_cast<std::uint32_t>(g.order());
  if (m % 2 != 0 || (m / 2) % 2 == 0) throw DomainError("Pecher forward needs Z_2n with n odd, got " + g.name());
  return m / 2;
}

void require_nf(const NearFactorization& nf) {
  auto report = verify(nf);
  if (!report.is_nf) throw PreconditionError("not a near-factorization: " + report.reason);
}

}  // namespace

NearFactorization pecher_forward(const NearFactorization& nf) {
  PecherContext ctx(pecher_n_for_cyclic(*nf.group()));
  require_nf(nf);
  if (!is_symmetric(nf)) throw PreconditionError("Pecher forward needs a symmetric near-factorization");
  std::vector<Element> a, b;
  for (auto x : nf.a()) a.push_back(ctx.forward(x));
  for (auto x : nf.b()) b.push_back(ctx.forward(x));
  return NearFactorization(ctx.dihedral(), make_set(std::move(a)), make_set(std::move(b)));
}

NearFactorization pecher_inverse(const NearFactorization& nf) {
  const auto& g = *nf.group();
  if (!g.is_dihedral()) throw DomainError("Pecher inverse needs a dihedral group, got " + g.name());
  PecherContext ctx(g.modulus());
  require_nf(nf);
  if (!is_strongly_symmetric(nf)) throw PreconditionError("Pecher inverse needs a strongly symmetric near-factorization");
  std::vector<Element> a, b;
  for (auto x : nf.a()) a.push_back(ctx.inverse(x));
  for (auto x : nf.b()) b.push_back(ctx.inverse(x));
  return NearFactorization(ctx.cyclic(), make_set(std::move(a)), make_set(std::move(b)));
}

GcdConditions check_gcd_conditions(std::uint32_t n, std::uint32_t k, std::uint32_t l) {
  if (static_cast<std::uint64_t>(k) * l != 2ull * n - 1) {
    throw DomainError("k l must equal 2n - 1 (n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                      ", l = " + std::to_string(l) + ")");
  }
  GcdConditions c;
  c.g1 = gcd_u(n, (k + 1) / 2);
  c.g2 = gcd_u(n, (l + 1) / 2);
  c.ok = c.g1 == 1 && c.g2 == 1;
  return c;
}

TransportResult equivalence_transport_forward(const NearFactorization& nf1, const NearFactorization& nf2,
                                              const EquivalenceMap& witness) {
  auto n = pecher_n_for_cyclic(*nf1.group());
  PecherContext ctx(n);
  const auto* unit = std::get_if<UnitForm>(&witness.f.form());
  if (!unit) throw DomainError("cyclic witness expected, got " + witness.f.describe());
  if (witness.h.code != 0 && witness.h.code != n) {
    throw InvariantViolation("witness shift " + std::to_string(witness.h.code) + " is neither 0 nor " +
                             std::to_string(n));
  }
  const auto& d = ctx.dihedral();
  TransportResult out{EquivalenceMap{Automorphism::dihedral(d, unit->r % n, 0),
                                     witness.h.code == 0 ? d->identity() : d->reflection(0)},
                      false, {}};
  out.verified = apply_map(out.map, pecher_forward(nf1)) == pecher_forward(nf2);
  return out;
}

TransportResult equivalence_transport_inverse(const NearFactorization& nf1, const NearFactorization& nf2,
                                              const EquivalenceMap& witness) {
  const auto& g = *nf1.group();
  if (!g.is_dihedral()) throw DomainError("dihedral witness expected");
  auto n = g.modulus();
  PecherContext ctx(n);
  auto c1 = pecher_inverse(nf1);
  auto c2 = pecher_inverse(nf2);
  auto gcds = check_gcd_conditions(n, static_cast<std::uint32_t>(nf1.k()), static_cast<std::uint32_t>(nf1.l()));

  const auto* dform = std::get_if<DihedralForm>(&witness.f.form());
  if (!dform) throw DomainError("dihedral witness expected, got " + witness.f.describe());
  bool closed_form = dform->j == 0 && (witness.h.code == 0 || witness.h.code == n);
  if (gcds.ok && !closed_form) {
    throw InvariantViolation("witness " + witness.describe() + " between strongly symmetric NFs has h outside {e, a} or j != 0");
  }

  const auto& z = ctx.cyclic();
  std::string tag = gcds.ok ? "" : kUnprovenTransport;
  if (closed_form) {
    auto r = dform->i % 2 == 1 ? dform->i : dform->i + n;
    EquivalenceMap m{Automorphism::unit(z, r), Element{witness.h.code == 0 ? 0u : n}};
    if (apply_map(m, c1) == c2) return TransportResult{std::move(m), true, tag};
  }
  if (auto w = are_equivalent(c1, c2)) return TransportResult{w->map, w->verified, tag};
  return TransportResult{identity_map(z), false, tag};
}

}  // namespace nearfac
