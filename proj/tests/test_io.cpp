#include <doctest.h>

#include <fstream>

#include "qdw/cauchy.hpp"
#include "qdw/io.hpp"
#include "qdw/verify.hpp"

using namespace qdw;

namespace {
std::string data(const std::string& name) { return std::string(QDW_TEST_DATA_DIR) + "/" + name; }
}

TEST_CASE("loading documents") {
  Workspace ws;
  auto loaded = load_files({data("luka2.json"), data("two_chain.json"), data("poset_n.json")}, ws);
  CHECK(loaded.size() == 3);
  REQUIRE(ws.quantales.count("luka2"));
  REQUIRE(ws.vcats.count("two_chain"));
  REQUIRE(ws.posets.count("poset_n"));
  const auto& q = ws.quantales.at("luka2");
  CHECK(q->size() == 3);
  CHECK(q->is_girard());
  const auto& X = ws.vcats.at("two_chain");
  CHECK(X.m == 2);
  CHECK(X.is_valid());
  CHECK(ws.posets.at("poset_n").n == 4);
}

TEST_CASE("reference and parse errors") {
  Workspace ws;
  try {
    load_files({data("orphan_vcat.json")}, ws);
    FAIL("expected UnknownQuantaleRef");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::UnknownQuantaleRef);
  }

  Workspace ws2;
  try {
    load_files({data("broken.json")}, ws2);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::ParseError);
    REQUIRE_FALSE(e.witness.empty());
    CHECK(e.witness[0] >= 1);  // line number
  }

  Workspace ws3;
  try {
    load_files({data("bad_tensor.json")}, ws3);
    FAIL("expected TensorNotMonoid");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::TensorNotMonoid);
  }

  Workspace ws4;
  try {
    load_files({data("bad_assoc.json")}, ws4);
    FAIL("expected TensorNotMonoid");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::TensorNotMonoid);
    CHECK(std::string(e.what()).find("associative") != std::string::npos);
    CHECK(e.witness.size() == 3);  // the offending triple
  }
}

TEST_CASE("matrix order and table tensor documents") {
  Workspace ws;
  load_files({data("bool2x2.json")}, ws);
  const auto& q = ws.quantales.at("bool2x2");
  CHECK(q->size() == 4);
  CHECK(q->join(1, 2) == 3);
  CHECK(q->is_girard());
  CHECK(q->is_completely_distributive());
}

TEST_CASE("summaries are deterministic") {
  Workspace ws;
  load_files({data("luka2.json"), data("two_chain.json")}, ws);
  auto a = quantale_summary(*ws.quantales.at("luka2")).dump();
  auto b = quantale_summary(*ws.quantales.at("luka2")).dump();
  CHECK(a == b);
  auto X = ws.vcats.at("two_chain");
  CHECK(vcat_summary(X)["valid"] == true);
}

TEST_CASE("relational violation report") {
  Workspace ws;
  load_files({data("luka2.json")}, ws);
  auto q = ws.quantales.at("luka2");
  VCat bad = VCat::raw(q, 2, {2, 2, 2, 1});  // a(q,q) = 1/2 breaks reflexivity
  auto j = relation_violations_json(bad, structure_to_relations(bad));
  CHECK(j["reflexive"] == false);
  REQUIRE_FALSE(j["violations"].empty());
  CHECK(j["violations"][0]["x"] == "x1");
}

TEST_CASE("lemma equivalence: all small codomains vs (V,hom)") {
  Workspace ws;
  load_files({data("luka2.json")}, ws);
  auto q = ws.quantales.at("luka2");
  VCat X = VCat::make(q, {{2, 1}, {0, 2}});
  for (std::vector<int> M : {std::vector<int>{}, {0}, {1}, {0, 1}})
    CHECK(l_closure_all_codomains(X, M, 3) == l_closure(X, M));
}

TEST_CASE("verify suites run and serialize deterministically") {
  verify::Options opt;
  opt.seed = 1;
  opt.max_size = 2;
  auto r1 = verify::run_suite("ordered", opt);
  auto r2 = verify::run_suite("ordered", opt);
  CHECK(verify::summary_json("ordered", opt, r1).dump() ==
        verify::summary_json("ordered", opt, r2).dump());
  for (const auto& cr : r1) CHECK(cr.passed);
  CHECK_THROWS_AS(verify::run_suite("nope", opt), Error);
}
