#include <doctest.h>

#include "qdw/cauchy.hpp"
#include "qdw/verify.hpp"

using namespace qdw;

namespace {
QuantalePtr luka2() { return Quantale::build_chain(3, TensorKind::Lukasiewicz); }
}

TEST_CASE("l-closure on the named fixtures") {
  auto l2 = luka2();
  VCat I = indiscrete(l2, 2);
  CHECK(l_closure(I, {0}) == std::vector<int>{0, 1});
  CHECK(l_closure(I, {}).empty());  // distinct constant functors disagree everywhere

  auto two = Quantale::build_two();
  VCat D = discrete(two, 2);
  CHECK(l_closure(D, {0}) == std::vector<int>{0});
  CHECK(l_closure(D, {0, 1}) == std::vector<int>{0, 1});
  // M = X is always closed: the quantifier is vacuous.
  VCat X = VCat::make(l2, {{2, 1, 0}, {0, 2, 1}, {0, 0, 2}});
  CHECK(l_closure(X, {0, 1, 2}) == std::vector<int>{0, 1, 2});
}

TEST_CASE("dense / closed-embedding / epi / regmono on the identity") {
  auto l2 = luka2();
  VCat X = VCat::make(l2, {{2, 1}, {0, 2}});
  VFun id{X, X, {0, 1}};
  CHECK(is_dense(id));
  CHECK(is_closed_embedding(id));
  CHECK(is_epi_sep(id));
  CHECK(is_regmono_sep(id));
}

TEST_CASE("epi iff dense on random separated morphisms") {
  auto l2 = luka2();
  Rng rng(17);
  for (int t = 0; t < 60; ++t) {
    VCat X = verify::random_separated_vcat(l2, 1 + rng.below(3), rng);
    VCat Y = verify::random_separated_vcat(l2, 1 + rng.below(3), rng);
    auto fs = enumerate_vfunctors(X, Y);
    if (fs.empty()) continue;
    const VFun& f = fs[rng.below(static_cast<int>(fs.size()))];
    CHECK(is_epi_sep(f) == is_dense(f));
    CHECK(is_regmono_sep(f) == is_closed_embedding(f));
  }
}

TEST_CASE("adjoint pairs") {
  auto l2 = luka2();
  VCat X = VCat::make(l2, {{2, 1}, {0, 2}});
  for (int x = 0; x < X.m; ++x) CHECK(is_left_adjoint_pair(X, representable_pair(X, x)));

  VCat D = discrete(l2, 2);
  PresheafPair half{{1, 1}, {1, 1}};
  CHECK(module_laws_hold(D, half));
  CHECK_FALSE(is_left_adjoint_pair(D, half));  // unit: V 1/2 (.) 1/2 = 0 < 1

  PresheafPair bad{{2, 0}, {2, 2}};  // phi not compatible with a(0,1) = 1
  CHECK_FALSE(module_laws_hold(X, bad));
  CHECK_THROWS_AS(is_left_adjoint_pair(X, bad), Error);

  // Criterion equivalence spot check.
  VCat V = v_as_vcat(l2);
  for (const auto& phi : enumerate_vfunctors(X, V)) {
    bool adjoint = false;
    for (const auto& psi : enumerate_vfunctors(X.dual(), V))
      if (is_left_adjoint_pair(X, PresheafPair{phi.map, psi.map})) adjoint = true;
    CHECK(adjoint == left_adjoint_by_colimit_criterion(X, phi.map));
  }
}

TEST_CASE("completion") {
  auto l2 = luka2();
  VCat pt = discrete(l2, 1);
  auto comp = cauchy_completion(pt);
  CHECK(comp.points.size() == 1);  // only the representable pair
  CHECK(comp.completed.m == 1);

  VCat X = VCat::make(l2, {{2, 1}, {0, 2}});
  auto c = cauchy_completion(X);
  for (int x = 0; x < X.m; ++x)
    for (int y = 0; y < X.m; ++y)
      CHECK(c.completed.at(c.yoneda.map[x], c.yoneda.map[y]) == X.at(x, y));
  CHECK(is_cauchy_complete(X));
  CHECK(is_cauchy_complete(c.completed));
  auto cc = cauchy_completion(c.completed);
  auto [s1, S1] = separated_reflection(c.completed);
  auto [s2, S2] = separated_reflection(cc.completed);
  CHECK(S1.m == S2.m);
}

TEST_CASE("criterion and completeness beyond the Lukasiewicz tensor") {
  // The adjointness criterion and finite Cauchy completeness also hold for
  // the minimum tensor and the distance-distribution model (k = top chains).
  for (auto q : {Quantale::build_chain(3, TensorKind::Minimum),
                 Quantale::build_df_quantale(2, 2, TensorKind::Lukasiewicz)}) {
    for (int m = 1; m <= 2; ++m)
      for (const auto& X : verify::all_valid_vcats(q, m)) {
        VCat V = v_as_vcat(q);
        auto psis = enumerate_vfunctors(X.dual(), V);
        for (const auto& phi : enumerate_vfunctors(X, V)) {
          bool adjoint = false;
          for (const auto& psi : psis)
            if (is_left_adjoint_pair(X, PresheafPair{phi.map, psi.map})) adjoint = true;
          CHECK(adjoint == left_adjoint_by_colimit_criterion(X, phi.map));
        }
        CHECK(is_cauchy_complete(X));
      }
  }
}

TEST_CASE("budget surfaces as SearchSpaceTooLarge") {
  auto l2 = luka2();
  VCat X = indiscrete(l2, 4);
  Budget tiny{10};
  CHECK_THROWS_AS(l_closure(X, {0}, tiny), Error);
  CHECK_THROWS_AS(enumerate_adjoint_pairs(X, tiny), Error);
}
