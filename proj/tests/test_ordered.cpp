#include <doctest.h>

#include "qdw/ordered.hpp"

using namespace qdw;

namespace {
QuantalePtr luka2() { return Quantale::build_chain(3, TensorKind::Lukasiewicz); }
QuantalePtr godel3() { return Quantale::build_chain(3, TensorKind::Minimum); }

FinPoset two_chain() { return FinPoset::make({{true, true}, {false, true}}); }
FinPoset two_antichain() { return FinPoset::make({{true, false}, {false, true}}); }
}  // namespace

TEST_CASE("classical Vietoris") {
  FinPoset one = FinPoset::make({{true}});
  FinPoset h1 = vietoris_H(one);
  REQUIRE(h1.n == 2);
  // upper_sets lists {} before {0}; the singleton sits below the empty set.
  CHECK(h1.leq(1, 0));
  CHECK_FALSE(h1.leq(0, 1));

  CHECK(vietoris_H(FinPoset::make({})).n == 1);
  CHECK(vietoris_H(two_antichain()).n == 4);
  CHECK(vietoris_H(two_chain()).n == 3);
}

TEST_CASE("phi_A") {
  auto g3 = godel3();
  FinPoset P = two_chain();
  // Antitone maps q -> values: psi(1) <= psi(0).
  std::vector<int> psi{2, 1};
  CHECK(phi_A(P, *g3, {}, psi) == g3->bot());
  CHECK(phi_A(P, *g3, {0, 1}, psi) == 2);
  CHECK(phi_A(P, *g3, {1}, psi) == 1);  // principal up-set evaluates at its minimum
  CHECK_THROWS_AS(phi_A(P, *g3, {0}, psi), Error);       // {0} is not upper here
  CHECK_THROWS_AS(phi_A(P, *g3, {1}, {0, 2}), Error);    // not antitone
}

TEST_CASE("irreducibility") {
  FinPoset anti = two_antichain();
  CHECK(is_irreducible(anti, {0}));
  CHECK(is_irreducible(anti, {1}));
  CHECK_FALSE(is_irreducible(anti, {0, 1}));  // splits into the two principal up-sets
  CHECK_FALSE(is_irreducible(anti, {}));

  for (const auto& q : {luka2(), godel3()}) {
    CHECK(irreducibility_equivalence(two_chain(), q).equivalence_holds);
    CHECK(irreducibility_equivalence(anti, q).equivalence_holds);
    // The 4-element diamond poset.
    FinPoset d = FinPoset::make({{true, true, true, true},
                                 {false, true, false, true},
                                 {false, false, true, true},
                                 {false, false, false, true}});
    CHECK(irreducibility_equivalence(d, q).equivalence_holds);
  }
}

TEST_CASE("hemimorphisms and function detection") {
  auto l2 = luka2();
  FinPoset P = two_chain();

  MonotoneRelation id_graph{&P, &P, {}};
  id_graph.rel.assign(4, 0);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      if (P.leq(x, y)) id_graph.rel[static_cast<std::size_t>(x) * 2 + y] = 1;
  REQUIRE(id_graph.is_monotone());
  CHECK(function_detection(id_graph, l2));
  CHECK(is_graph_of_monotone_map(id_graph));

  FinPoset anti = two_antichain();
  MonotoneRelation total{&P, &anti, {}};
  total.rel.assign(4, 1);
  REQUIRE(total.is_monotone());
  CHECK_FALSE(function_detection(total, l2));
  CHECK_FALSE(is_graph_of_monotone_map(total));

  // CR on an antitone map is the hit-sup along the relation.
  std::vector<int> psi{1, 2};  // antitone on the antichain: any map qualifies
  auto cr = hemimorphism_from_relation(total, l2, psi);
  CHECK(cr == std::vector<int>{2, 2});

  MonotoneRelation broken{&P, &P, {}};
  broken.rel.assign(4, 0);
  broken.rel[3] = 1;  // only (1,1): R(1) must shrink into R(0) but does not
  CHECK_FALSE(broken.is_monotone());
  CHECK_THROWS_AS(hemimorphism_from_relation(broken, l2, psi), Error);
}
