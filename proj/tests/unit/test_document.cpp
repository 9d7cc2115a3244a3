#include <doctest.h>

#include <filesystem>

#include "nccheck/document.hpp"

using namespace nccheck;
using doc::Json;

namespace {

std::string parse_error_path(const std::string& text) {
  try {
    doc::parse_triple_text(text);
  } catch (const doc::ParseError& e) {
    return e.path();
  }
  return "no error";
}

const char* kMinimal = R"({"schema_version": "nccheck/1", "hilbert_dim": 2, "algebra_generators": [],
  "dirac": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]})";

}  // namespace

TEST_CASE("complex scalars and matrices serialize row-major as [re, im]") {
  ComplexMatrix m(2, 3);
  m << Complex(1, 2), Complex(3, 0), Complex(0, -1), Complex(-0.0, -0.0), Complex(0.5, 0.25), Complex(7, 8);
  const Json j = doc::matrix_to_json(m);
  REQUIRE(j.size() == 2);
  REQUIRE(j[0].size() == 3);
  CHECK(j[0][2] == Json::array({0.0, -1.0}));
  CHECK(doc::dump(j[1]) == "[[0.0, 0.0], [0.5, 0.25], [7.0, 8.0]]\n");
  CHECK((doc::matrix_from_json(j, "/m") - m).norm() == 0.0);
}

TEST_CASE("every catalog triple survives a document round trip exactly") {
  for (const auto& e : named_examples()) {
    INFO(e.name);
    for (const auto& t : e.factors) {
      const std::string text = doc::dump(doc::to_json(doc::from_triple(t)));
      const doc::TripleDocument d = doc::parse_triple_text(text);
      const FiniteSpectralTriple back = d.build(t.tol());
      CHECK((back.dirac() - t.dirac()).norm() == 0.0);
      REQUIRE(back.algebra_generators().size() == t.algebra_generators().size());
      for (std::size_t k = 0; k < t.algebra_generators().size(); ++k)
        CHECK((back.algebra_generators()[k] - t.algebra_generators()[k]).norm() == 0.0);
      CHECK(back.is_even() == t.is_even());
      if (t.is_even()) CHECK((*back.grading() - *t.grading()).norm() == 0.0);
      CHECK(back.real_structure().has_value() == t.real_structure().has_value());
      if (t.real_structure()) CHECK((back.j().kernel() - t.j().kernel()).norm() == 0.0);
      CHECK(doc::dump(doc::to_json(d)) == text);
    }
  }
}

TEST_CASE("parse errors carry the field path") {
  CHECK(parse_error_path("{") == "");
  CHECK(parse_error_path("[1, 2]") == "");
  CHECK(parse_error_path(R"({"hilbert_dim": 2})") == "/schema_version");
  CHECK(parse_error_path(R"({"schema_version": "nccheck/0"})") == "/schema_version");
  CHECK(parse_error_path(R"({"schema_version": "nccheck/1", "hilbert_dim": -1})") == "/hilbert_dim");
  CHECK(parse_error_path(R"({"schema_version": "nccheck/1", "hilbert_dim": 2, "algebra_generators": []})") == "/dirac");
  CHECK(parse_error_path(R"({"schema_version": "nccheck/1", "hilbert_dim": 2, "algebra_generators": [],
      "dirac": [[[0, 0], [1, 0]], [[1, 0], [0, "x"]]]})") == "/dirac/1/1/1");
  CHECK(parse_error_path(R"({"schema_version": "nccheck/1", "hilbert_dim": 2, "algebra_generators": [],
      "dirac": [[[0, 0], [1, 0]], [[1, 0]]]})") == "/dirac/1");
  CHECK(parse_error_path(R"({"schema_version": "nccheck/1", "hilbert_dim": 3, "algebra_generators": [],
      "dirac": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]})") == "/dirac");
  CHECK(parse_error_path(R"({"schema_version": "nccheck/1", "hilbert_dim": 2, "algebra_generators": [],
      "dirac": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]], "real_structure": {}})") == "/real_structure/kernel");
  CHECK(parse_error_path(R"({"schema_version": "nccheck/1", "hilbert_dim": 2, "algebra_generators": [],
      "dirac": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]], "metadata": {"tol": -1}})") == "/metadata/tol");
  CHECK(parse_error_path(kMinimal) == "no error");
}

TEST_CASE("invalid triples are rejected when built, naming the invariant") {
  doc::TripleDocument d = doc::parse_triple_text(kMinimal);
  d.dirac(0, 1) = 2.0;
  try {
    d.build(1e-9);
    FAIL("expected an invariant violation");
  } catch (const InvariantViolation& e) {
    CHECK(e.invariant() == "dirac self-adjoint");
  }
}

TEST_CASE("metadata: tolerance and expected verdicts") {
  doc::TripleDocument d = doc::parse_triple_text(kMinimal);
  CHECK_FALSE(d.tolerance());
  CHECK(d.expected().empty());
  d.metadata["tol"] = 1e-6;
  d.metadata["expected"] = Json{{"spin", "true"}, {"order_two", false}, {"dim_algebra", 1}};
  CHECK(*d.tolerance() == 1e-6);
  const Verdicts v = d.expected();
  CHECK(v.at("spin") == "true");
  CHECK(v.at("order_two") == "false");
  CHECK(v.at("dim_algebra") == "1");

  const doc::ExpectationCheck c = doc::compare_expected(v, Verdicts{{"spin", "true"}, {"order_two", "true"}});
  CHECK(c.mismatches.size() == 2);
  CHECK(c.json["spin"]["match"] == true);
  CHECK(c.json["dim_algebra"]["actual"] == "missing");
}

TEST_CASE("committed golden files parse and reproduce their catalog expectations") {
  const std::filesystem::path dir(NCCHECK_DATA_DIR "/catalog");
  for (const auto& e : named_examples()) {
    INFO(e.name);
    const auto docs = doc::golden_documents(e);
    for (std::size_t k = 0; k < docs.size(); ++k) {
      const std::string path = (dir / doc::golden_name(e, k)).string();
      REQUIRE(std::filesystem::exists(path));
      const doc::TripleDocument d = doc::load_triple(path);
      CHECK(doc::dump(doc::to_json(d)) == doc::dump(doc::to_json(docs[k])));
    }
    if (e.factors.size() == 1) {
      const doc::TripleDocument d = doc::load_triple((dir / doc::golden_name(e, 0)).string());
      const TripleAnalysis a = analyze(d.build(kDefaultTol));
      CHECK(doc::compare_expected(d.expected(), a.verdicts).mismatches.empty());
    }
  }
}

TEST_CASE("reports serialize deterministically") {
  const FiniteSpectralTriple t = example_hodge_m2();
  const std::string a = doc::dump(doc::to_json(analyze(t))), b = doc::dump(doc::to_json(analyze(t)));
  CHECK(a == b);
  const Json j = Json::parse(a);
  CHECK(j["verdicts"]["hodge"] == "true");
  CHECK(j["dimensions"]["clifford"] == 4);
  CHECK(j["ko"] == Json::array({1}));
}
