#include <doctest.h>

#include "qdw/quantale.hpp"

using namespace qdw;

namespace {

QuantalePtr luka(int n) { return Quantale::build_chain(n + 1, TensorKind::Lukasiewicz); }

std::vector<std::vector<bool>> m3_leq() {
  const int n = 5;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (int a = 1; a <= 3; ++a) {
    leq[0][a] = true;
    leq[a][4] = true;
  }
  leq[0][4] = true;
  return leq;
}

// The M3 lattice does not support tensor = meet (no adjoint); this is the
// join-preserving structure with unit the atom a and all other atom
// products collapsing to top.
QuantalePtr m3() {
  std::vector<std::vector<int>> tensor = {{0, 0, 0, 0, 0},
                                          {0, 1, 2, 3, 4},
                                          {0, 2, 4, 4, 4},
                                          {0, 3, 4, 4, 4},
                                          {0, 4, 4, 4, 4}};
  return Quantale::build_table(m3_leq(), tensor, 1, {"0", "a", "b", "c", "1"});
}

}  // namespace

TEST_CASE("two element chain") {
  auto q = Quantale::build_two();
  CHECK(q->size() == 2);
  CHECK(q->tensor(1, 1) == 1);
  CHECK(q->hom(1, 0) == 0);
  CHECK(q->hom(0, 0) == 1);
  CHECK(q->unit() == q->top());
  CHECK(q->is_girard());
}

TEST_CASE("lukasiewicz chain values") {
  auto q = luka(2);  // {0, 1/2, 1}
  CHECK(q->tensor(1, 1) == 0);   // 1/2 (.) 1/2 = 0
  CHECK(q->hom(1, 0) == 1);      // hom(1/2, 0) = 1/2 by table scan
  CHECK(q->hom(0, 0) == 2);
  CHECK(q->is_lukasiewicz_chain());

  auto g = Quantale::build_chain(3, TensorKind::Minimum);
  CHECK(g->hom(1, 0) == 0);      // Godel implication collapses
  CHECK_FALSE(g->is_girard());
  CHECK(g->hom(g->hom(1, 0), 0) == 2);  // double negation of 1/2 is 1
  CHECK_FALSE(g->is_lukasiewicz_chain());

  CHECK_THROWS_AS(Quantale::build_chain(1, TensorKind::Minimum), Error);
}

TEST_CASE("build_table validation with witnesses") {
  // 2x2 Boolean lattice, tensor = meet.
  std::vector<std::vector<bool>> leq = {{true, true, true, true},
                                        {false, true, false, true},
                                        {false, false, true, true},
                                        {false, false, false, true}};
  std::vector<std::vector<int>> tensor = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
  auto q = Quantale::build_table(leq, tensor, 3);
  CHECK(q->join(1, 2) == 3);
  CHECK(q->meet(1, 2) == 0);
  CHECK(q->is_completely_distributive());
  CHECK(q->is_girard());  // Boolean complement is a dualizing negation

  // Broken unit law.
  std::vector<std::vector<bool>> leq2 = {{true, true}, {false, true}};
  std::vector<std::vector<int>> bad = {{0, 0}, {0, 0}};
  try {
    Quantale::build_table(leq2, bad, 1);
    FAIL("expected TensorNotMonoid");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::TensorNotMonoid);
  }

  // Not a lattice: two-element antichain.
  std::vector<std::vector<bool>> anti = {{true, false}, {false, true}};
  std::vector<std::vector<int>> t2 = {{0, 0}, {0, 1}};
  CHECK_THROWS_AS(Quantale::build_table(anti, t2, 1), Error);

  // Lawful monoid whose tensor does not absorb bottom: max with unit 0.
  std::vector<std::vector<bool>> leq3 = {{true, true, true}, {false, true, true}, {false, false, true}};
  std::vector<std::vector<int>> t3 = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
  try {
    Quantale::build_table(leq3, t3, 0);
    FAIL("expected AdjunctionFails");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::AdjunctionFails);
  }

  // Degenerate one-point quantale is accepted and flagged trivial.
  auto one = Quantale::build_table({{true}}, {{0}}, 0);
  CHECK(one->is_trivial());
  CHECK(one->is_completely_distributive());
}

TEST_CASE("totally below: definitional oracle is the contract") {
  for (auto q : {Quantale::build_two(), luka(2), luka(3),
                 Quantale::build_chain(4, TensorKind::Minimum), m3()}) {
    auto fast = totally_below(*q);
    auto brute = totally_below_bruteforce(*q);
    CHECK(fast == brute);
  }
  auto q = luka(2);
  // On a chain: v << u iff v <= u and u != bottom.
  for (int v = 0; v < 3; ++v)
    for (int u = 0; u < 3; ++u) CHECK(q->below(v, u) == (u != 0 && v <= u));
  CHECK_FALSE(q->below(0, 0));

  auto d = m3();
  CHECK_FALSE(d->below(1, 4));  // atom not totally below top: {b,c} covers
  CHECK_FALSE(d->is_completely_distributive());
  CHECK(luka(4)->is_completely_distributive());
}

TEST_CASE("meet on M3 is not a quantale tensor") {
  std::vector<std::vector<int>> meet_tensor(5, std::vector<int>(5));
  auto leq = m3_leq();
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      meet_tensor[a][b] = (a == b) ? a : (a == 4 ? b : (b == 4 ? a : 0));
  try {
    Quantale::build_table(leq, meet_tensor, 4);
    FAIL("expected AdjunctionFails");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::AdjunctionFails);
    REQUIRE(e.witness.size() == 3);
    CHECK(e.witness[0] == 1);  // a (x) (b v c) != (a (x) b) v (a (x) c)
  }
}

TEST_CASE("assumption 3 directedness") {
  CHECK(luka(3)->assumption3_holds());
  CHECK(Quantale::build_two()->assumption3_holds());
  CHECK(m3()->assumption3_holds());  // {u << v} is {bot} or empty here
}

TEST_CASE("subbases") {
  auto q = luka(2);
  auto scott = q->scott_subbase();
  REQUIRE(scott.size() == 3);
  CHECK(scott[0] == std::vector<int>{1, 2});
  CHECK(scott[1] == std::vector<int>{1, 2});
  CHECK(scott[2] == std::vector<int>{2});

  auto dual = q->dual_scott_subbase();
  CHECK(dual[1] == std::vector<int>{1, 2});  // up-set of 1/2

  auto two = Quantale::build_two();
  auto topo = topology_from_subbase(2, two->lawson_subbase());
  CHECK(topo.size() == 4);  // discrete

  for (auto qq : {luka(3), Quantale::build_chain(4, TensorKind::Minimum)}) {
    auto t = topology_from_subbase(qq->size(), qq->lawson_subbase());
    CHECK(t.size() == (std::size_t(1) << qq->size()));
  }

  CHECK_THROWS_AS(m3()->scott_subbase(), Error);
}

TEST_CASE("df quantale") {
  auto q = Quantale::build_df_quantale(2, 2, TensorKind::Lukasiewicz);
  CHECK(q->size() == 3);  // anchored monotone maps on {t0, t1, inf}
  CHECK(q->tensor(q->unit(), q->unit()) == q->unit());
  for (int u = 0; u < q->size(); ++u) CHECK(q->tensor(q->bot(), u) == q->bot());
  CHECK(q->is_chain());
  CHECK(q->is_completely_distributive());

  auto qm = Quantale::build_df_quantale(3, 3, TensorKind::Minimum);
  CHECK(qm->assumption2_holds());
  for (int u = 0; u < qm->size(); ++u)
    for (int v = 0; v < qm->size(); ++v)
      for (int w = 0; w < qm->size(); ++w)
        CHECK(qm->leq(qm->tensor(u, w), v) == qm->leq(w, qm->hom(u, v)));

  // Every configured size passes the full table validation (the builders
  // route through build_table, which throws on any broken law).
  for (int tp = 2; tp <= 3; ++tp)
    for (int vl = 2; vl <= 3; ++vl)
      for (auto kind : {TensorKind::Lukasiewicz, TensorKind::Minimum}) {
        auto d = Quantale::build_df_quantale(tp, vl, kind);
        CHECK(d->unit() == d->top());
        CHECK(d->is_completely_distributive());
      }

  CHECK_THROWS_AS(Quantale::build_df_quantale(6, 6, TensorKind::Minimum, 100), Error);
}

TEST_CASE("dense subset variants") {
  // Dense subset smaller than the carrier still approximates on a chain.
  auto q = Quantale::build_table(
      {{true, true, true}, {false, true, true}, {false, false, true}},
      {{0, 0, 0}, {0, 0, 1}, {0, 1, 2}}, 2, {"0", "1/2", "1"}, {0, 1, 2});
  CHECK(q->assumption2_holds());
  CHECK(q->is_girard());
}
