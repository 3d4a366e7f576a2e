#include <doctest.h>

#include "qdw/priestley.hpp"
#include "qdw/verify.hpp"

using namespace qdw;

namespace {
QuantalePtr luka2() { return Quantale::build_chain(3, TensorKind::Lukasiewicz); }
}

TEST_CASE("vop objects") {
  auto two = Quantale::build_two();
  VCat vop = vop_object(two);
  CHECK(vop.at(0, 1) == two->hom(1, 0));  // reversed order
  CHECK(vop.at(1, 0) == two->hom(0, 1));

  auto l2 = luka2();
  VCat v = vop_object(l2);
  CHECK(v.is_valid());
  CHECK(v.is_separated());
  CHECK(is_priestley(v).ok());
}

TEST_CASE("two-chain is Priestley, indiscrete pair is not") {
  auto two = Quantale::build_two();
  VCat C = VCat::make(two, {{1, 1}, {0, 1}});
  auto rep = is_priestley(C);
  CHECK(rep.ok());
  CHECK(rep.cone_size == 3);

  auto l2 = luka2();
  VCat I = indiscrete(l2, 2);
  auto rep2 = is_priestley(I);
  CHECK_FALSE(rep2.point_separating);
  CHECK(rep2.separation_witness == std::pair<int, int>{0, 1});
}

TEST_CASE("priestley implies separated; finite separated implies priestley") {
  auto l2 = luka2();
  Rng rng(29);
  for (int t = 0; t < 80; ++t) {
    VCat X = verify::random_vcat(l2, 2 + rng.below(3), rng);
    auto rep = is_priestley(X);
    CHECK(rep.ok() == X.is_separated());
  }
}

TEST_CASE("reflection") {
  auto l2 = luka2();
  VCat I = indiscrete(l2, 2);
  auto [q, P] = reflect_pi0(I);
  CHECK(P.m == 1);
  CHECK(is_priestley(P).ok());

  // Already-Priestley input: bijective quotient preserving the structure.
  VCat X = VCat::make(l2, {{2, 1}, {0, 2}});
  REQUIRE(X.is_separated());
  auto [q2, P2] = reflect_pi0(X);
  CHECK(P2.m == X.m);
  CHECK(q2.is_injective());
  for (int x = 0; x < X.m; ++x)
    for (int y = 0; y < X.m; ++y) CHECK(P2.at(q2.map[x], q2.map[y]) == X.at(x, y));
}

TEST_CASE("reflection universal property on a fixture") {
  auto l2 = luka2();
  VCat X = indiscrete(l2, 2);
  auto [quot, PX] = reflect_pi0(X);
  for (const auto& Y : verify::all_valid_vcats(l2, 2)) {
    if (!Y.is_separated()) continue;
    for (const auto& f : enumerate_vfunctors(X, Y)) {
      int count = 0;
      for (const auto& g : enumerate_vfunctors(PX, Y)) {
        bool commutes = true;
        for (int x = 0; x < X.m; ++x)
          if (g.map[quot.map[x]] != f.map[x]) commutes = false;
        if (commutes) ++count;
      }
      CHECK(count == 1);
    }
  }
}
