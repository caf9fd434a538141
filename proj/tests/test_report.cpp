#include <catch_amalgamated.hpp>

#include "imw/corpus.hpp"
#include "imw/report.hpp"
#include "oracles.hpp"

using namespace imw;

TEST_CASE("M3 report") {
  auto r = analyze(named::m3(), "M3");
  CHECK(r.all_hold());
  auto j = report_to_json(r);
  CHECK(j["verdicts"]["f_inverse"]["holds"] == true);
  CHECK(j["schema"] == 1);
  REQUIRE(r.gluing_map);
  CHECK(*r.gluing_map == std::vector<Elem>{0, 1});
  CHECK(j.dump().find("\"f_inverse\":{") != std::string::npos);
}

TEST_CASE("B21 human report prints the E-unitary witness") {
  auto r = analyze(named::brandt_b21(), "B21");
  CHECK_FALSE(r.all_hold());
  REQUIRE(r.e_unitary);
  CHECK_FALSE(r.e_unitary->holds);
  auto text = report_to_human(r);
  CHECK(text.find("e_unitary        no    witness a, ab") != std::string::npos);
  CHECK_FALSE(r.weakly_schreier);
  CHECK(report_to_json(r)["verdicts"]["weakly_schreier"].is_null());
}

TEST_CASE("trivial monoid report has empty witnesses") {
  auto j = report_to_json(analyze(named::trivial(), "T1"));
  for (auto& [name, v] : j["verdicts"].items()) {
    INFO(name);
    CHECK(v["holds"] == true);
    CHECK(v["witness"]["indices"].empty());
  }
}

TEST_CASE("non-inverse input reports only the inverse verdict") {
  auto m = FiniteMonoid::validate({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0);
  auto r = analyze(m, "LZ");
  CHECK_FALSE(r.inverse.holds);
  CHECK(r.inverse.detail.find("NonUniqueInverse") == 0);
  CHECK_FALSE(r.e_unitary);
  CHECK(report_to_json(r)["verdicts"]["e_unitary"].is_null());
}

TEST_CASE("report verdicts are internally consistent") {
  for (const auto& m : enumerate_inverse_monoids(5)) {
    auto r = analyze(m.base(), "x");
    if (r.f_inverse->holds) CHECK(r.e_unitary->holds);
    if (r.f_inverse->holds && r.clifford->holds) CHECK(r.gluing_map);
    CHECK(r.weakly_schreier.has_value() == r.e_unitary->holds);
    if (r.weakly_schreier) CHECK(r.weakly_schreier->holds == r.f_inverse->holds);
    auto t = oracle::rows(m.base());
    CHECK(r.clifford->holds == oracle::clifford(t));
  }
}

TEST_CASE("JSON output is byte stable") {
  auto a = report_to_json(analyze(named::m7(), "M7")).dump(2);
  auto b = report_to_json(analyze(named::m7(), "M7")).dump(2);
  CHECK(a == b);
  auto parsed = Json::parse(a);
  CHECK(parsed.dump(2) == a);
}

TEST_CASE("extension report") {
  auto r = analyze_extension(named::m7(), "M7");
  CHECK(r.extension.holds);
  REQUIRE(r.weakly_schreier);
  CHECK_FALSE(r.weakly_schreier->holds);
  CHECK(r.weakly_schreier->detail.find("EmptyCandidateFiber") == 0);
  CHECK_FALSE(r.ok());
  CHECK(r.iff_consistent);

  auto b = analyze_extension(named::brandt_b21(), "B21");
  CHECK_FALSE(b.extension.holds);
  CHECK(extension_report_to_json(b)["weakly_schreier"].is_null());

  auto m3 = analyze_extension(named::m3(), "M3");
  CHECK(m3.ok());
  CHECK(m3.splitting == std::vector<Elem>{0, 2});
}

TEST_CASE("decomposition") {
  auto d = decompose(named::m3(), "M3");
  CHECK(d.f_inverse.holds);
  REQUIRE(d.almost_action);
  REQUIRE(d.factor_system);
  REQUIRE(d.gluing_map);
  auto j = decomposition_to_json(d);
  CHECK(j["gluing_map"]["kind"] == "gluing_map");
  // Each part rebuilds a monoid isomorphic to M3.
  auto fp = f_product(almost_action_from_json(j["almost_action"])).monoid.base();
  auto cp = crossed_product(factor_system_from_json(j["factor_system"])).monoid;
  auto gl = gluing(gluing_map_from_json(j["gluing_map"])).product.monoid.base();
  for (const auto& m : {fp, cp, gl}) {
    CHECK(oracle::isomorphic(oracle::rows(m), oracle::rows(named::m3())));
  }

  auto m7 = decompose(named::m7(), "M7");
  CHECK_FALSE(m7.f_inverse.holds);
  CHECK_FALSE(m7.almost_action);
  CHECK(decomposition_to_json(m7)["almost_action"].is_null());
}
