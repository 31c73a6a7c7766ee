#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "nearfac/constructions.hpp"
#include "nearfac/corpus.hpp"
#include "nearfac/enumerate.hpp"
#include "nearfac/errors.hpp"
#include "nearfac/sedf.hpp"

using namespace nearfac;

namespace {

GsedfInstance singletons(std::uint32_t n) {
  GsedfInstance inst;
  inst.group = make_group(GroupId::cyclic(n));
  for (std::uint32_t x = 0; x < n; ++x) {
    inst.sets.push_back(ElementSet{Element{x}});
    inst.lambdas.push_back(1);
  }
  return inst;
}

std::vector<Element> random_subset(std::uint32_t n, std::size_t size, std::mt19937& rng) {
  std::vector<Element> all;
  for (std::uint32_t x = 0; x < n; ++x) all.push_back(Element{x});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(size);
  return make_set(all);
}

}  // namespace

TEST_CASE("external differences") {
  auto z5 = make_group("Z:5");
  CHECK(external_differences(*z5, ElementSet{Element{1}}, ElementSet{Element{0}}) == std::vector<Element>{Element{1}});

  auto z10 = load_fixture("z10");
  auto d = external_differences(*z10.group(), z10.b(), z10.a());
  REQUIRE(d.size() == 9);
  for (std::uint32_t i = 0; i < 9; ++i) CHECK(d[i].code == i + 1);
  CHECK_THROWS_AS(external_differences(*make_group("D:5"), ElementSet{}, ElementSet{}), CapabilityError);
}

TEST_CASE("an NF of Z_16 is a (16,2;3,5;1,1)-GSEDF") {
  auto inst = nf_to_gsedf(load_fixture("z16"));
  CHECK(verify_gsedf(inst));
  CHECK(inst.ells() == std::vector<std::uint32_t>{3, 5});
  CHECK(inst.lambdas == std::vector<std::uint32_t>{1, 1});
  CHECK(gsedf_to_nf(inst) == load_fixture("z16"));
}

TEST_CASE("trivial SEDFs") {
  for (std::uint32_t n : {5u, 7u}) CHECK(verify_gsedf(singletons(n)));
}

TEST_CASE("perturbed instances fail") {
  auto inst = nf_to_gsedf(load_fixture("z16"));
  auto& a = inst.sets[0];
  for (std::uint32_t c = 0; c < 16; ++c) {
    if (std::binary_search(a.begin(), a.end(), Element{c}) || std::binary_search(inst.sets[1].begin(), inst.sets[1].end(), Element{c})) continue;
    auto copy = inst;
    copy.sets[0].back() = Element{c};
    copy.sets[0] = make_set(copy.sets[0]);
    CHECK_FALSE(verify_gsedf(copy));
  }
  auto overlap = inst;
  overlap.sets[1].push_back(overlap.sets[0].front());
  overlap.sets[1] = make_set(overlap.sets[1]);
  CHECK_FALSE(check_gsedf(overlap).ok);
  auto wrong_lambda = inst;
  wrong_lambda.lambdas = {2, 1};
  CHECK_FALSE(verify_gsedf(wrong_lambda));
}

TEST_CASE("conversions") {
  auto z5 = trivial_nf(make_group("Z:5"));
  auto inst = nf_to_gsedf(z5);
  CHECK(inst.sets[0] == ElementSet{Element{0}});
  CHECK(inst.sets[1] == codes_to_set(std::vector<std::uint32_t>{1, 2, 3, 4}));
  CHECK(verify_gsedf(inst));
  CHECK_THROWS_AS(gsedf_to_nf(singletons(5)), DomainError);
  CHECK_THROWS_AS(nf_to_gsedf(load_fixture("d8")), CapabilityError);
  std::vector<std::uint32_t> aa{9, 9};
  CHECK(verify_gsedf(nf_to_gsedf(blowup_nf(aa))));
}

TEST_CASE("round trips over every NF of small cyclic groups") {
  for (std::uint32_t n : {10u, 16u, 26u}) {
    auto g = make_group(GroupId::cyclic(n));
    for (auto k : proper_divisors(n - 1)) {
      SearchSpec spec;
      spec.group = g->id();
      spec.k = k;
      spec.l = (n - 1) / k;
      spec.symmetry_breaking = false;
      spec.keep_solutions = true;
      for (const auto& nf : enumerate_nfs(spec).solutions) {
        auto inst = nf_to_gsedf(nf);
        CHECK(verify_gsedf(inst));
        CHECK(inst.lambdas[0] == inst.lambdas[1]);
        CHECK(gsedf_to_nf(inst) == nf);
        CHECK(nf_to_gsedf(gsedf_to_nf(inst)).sets == inst.sets);
      }
    }
  }
}

TEST_CASE("NF and GSEDF verdicts agree on random pairs") {
  std::mt19937 rng(29);
  for (auto [n, k] : {std::pair{16u, 3u}, std::pair{26u, 5u}}) {
    auto g = make_group(GroupId::cyclic(n));
    auto l = (n - 1) / k;
    for (int trial = 0; trial < 200; ++trial) {
      auto a = random_subset(n, k, rng);
      auto b = random_subset(n, l, rng);
      NearFactorization nf(g, a, b);
      bool is_nf = verify(nf).is_nf;
      CHECK(is_nf == verify_gsedf(nf_to_gsedf(nf)));
    }
    // random pairs are almost never NFs, so also every translate of a real one
    auto real = enumerate_nfs(SearchSpec{g->id(), k, l, Restriction::All, {}, 1, {}, true, false}).classes.front().canonical;
    for (auto h : g->elements()) {
      auto moved = apply_map({Automorphism::identity(g), h}, real);
      CHECK(verify_gsedf(nf_to_gsedf(moved)));
    }
  }
}
