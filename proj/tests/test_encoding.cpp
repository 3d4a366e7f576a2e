#include <doctest.h>

#include "qdw/encoding.hpp"
#include "qdw/verify.hpp"

using namespace qdw;

namespace {
QuantalePtr luka2() { return Quantale::build_chain(3, TensorKind::Lukasiewicz); }
QuantalePtr luka3() { return Quantale::build_chain(4, TensorKind::Lukasiewicz); }
}

TEST_CASE("encode/decode on the worked example") {
  auto q = luka2();
  // phi(p) = 1/2, phi(q) = 0.
  auto fam = encode({1, 0}, q);
  CHECK(fam.family[0].rows[0] == 0b11);  // B_0 = {p,q}
  CHECK(fam.family[1].rows[0] == 0b01);  // B_1/2 = {p}
  CHECK(fam.family[2].rows[0] == 0b00);  // B_1 = {}
  CHECK(decode(fam) == std::vector<int>{1, 0});

  // Constant top.
  auto topfam = encode({2, 2, 2}, q);
  for (const auto& b : topfam.family) CHECK(b.rows[0] == 0b111);

  // Violating monotonicity of the level sets on a chain.
  LevelFamily broken;
  broken.q = q;
  broken.base_size = 2;
  broken.family.assign(3, BitRel(1));
  broken.family[0].rows[0] = 0b11;
  broken.family[1].rows[0] = 0b01;
  broken.family[2].rows[0] = 0b10;  // B_1 not inside B_1/2
  CHECK(broken.first_incompatible() == 2);
  CHECK_THROWS_AS(decode(broken), Error);
}

TEST_CASE("bijection, exhaustively on small bases") {
  for (auto q : {luka2(), luka3(), Quantale::build_chain(4, TensorKind::Minimum)}) {
    for (int b = 1; b <= 3; ++b) {
      std::vector<int> phi(b, 0);
      int count = 0;
      do {
        auto fam = encode(phi, q);
        CHECK(fam.is_compatible());
        CHECK(decode(fam) == phi);
        ++count;
      } while (next_map(phi, q->size()));
      CHECK(count == static_cast<int>(checked_pow(q->size(), b)));
    }
  }
}

TEST_CASE("relation families match the V-category axioms") {
  auto two = Quantale::build_two();
  VCat C = VCat::make(two, {{1, 1}, {0, 1}});
  auto fam = structure_to_relations(C);
  CHECK(relations_reflexive(fam));
  CHECK(relations_transitive(fam));
  CHECK(r_k_antisymmetric(fam));
  // R_1 is the order itself.
  CHECK(fam.family[1].get(0, 1));
  CHECK_FALSE(fam.family[1].get(1, 0));

  auto l2 = luka2();
  VCat I = VCat::make(l2, {{2, 2}, {2, 2}});
  CHECK_FALSE(r_k_antisymmetric(structure_to_relations(I)));

  // Cross-oracle equivalence on random raw matrices.
  auto l3 = luka3();
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    const int m = 4;
    std::vector<int> flat(m * m);
    for (auto& v : flat) v = rng.below(l3->size());
    VCat X = VCat::raw(l3, m, flat);
    auto f = structure_to_relations(X);
    CHECK((relations_reflexive(f) && relations_transitive(f)) == X.is_valid());
    CHECK(r_k_antisymmetric(f) == X.is_separated());
  }
}

TEST_CASE("violation report carries witnesses") {
  auto two = Quantale::build_two();
  VCat bad = VCat::raw(two, 2, {1, 1, 1, 0});  // a(1,1) = 0: reflexivity fails
  auto fam = structure_to_relations(bad);
  auto violations = relation_violations(fam);
  REQUIRE_FALSE(violations.empty());
  bool found_reflexivity = false;
  for (const auto& v : violations)
    if (v.kind == 0 && v.x == 1) found_reflexivity = true;
  CHECK(found_reflexivity);
}

TEST_CASE("bit relation composition") {
  BitRel a(3), b(3);
  a.set(0, 1);
  b.set(1, 2);
  auto c = a.compose(b);
  CHECK(c.get(0, 2));
  CHECK_FALSE(c.get(0, 1));
  CHECK(a.subset_of(a));
  CHECK_FALSE(c.subset_of(a));
}
