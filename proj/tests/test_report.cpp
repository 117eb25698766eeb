#include <doctest.h>

#include "hopfint/integrals.hpp"
#include "hopfint/report.hpp"

using namespace hopfint;

namespace {
FieldPtr Q() { return FieldSpec::rationals(); }
}

TEST_CASE("reports are byte-identical across runs") {
  BuiltPreset p = build_preset("sweedler");
  json a = report_finite(*p.finite, p.descriptor, p.golden, 1000);
  json b = report_finite(*p.finite, p.descriptor, p.golden, 1000);
  CHECK(a.dump(2) == b.dump(2));

  BuiltPreset f = build_preset("infinite_dihedral");
  json c = report_family(*f.family, f.descriptor, f.golden, 1000);
  json d = report_family(*f.family, f.descriptor, f.golden, 1000);
  CHECK(c.dump(2) == d.dump(2));
}

TEST_CASE("json round trip preserves the Hopf structure") {
  for (const char* name : {"sweedler", "klein_four", "circle", "taft_finite(n=3)"}) {
    BuiltPreset p = build_preset(name);
    json j = hopf_to_json(*p.finite);
    FiniteHopfAlgebra back = hopf_from_json(j);
    INFO(name);
    CHECK(back.alg.mul == p.finite->alg.mul);
    CHECK(back.counit == p.finite->counit);
    CHECK(back.antipode == p.finite->antipode);
    CHECK(verify_axioms(back).all_passed());
    CHECK(integral_order(back, 100) == integral_order(*p.finite, 100));
  }
}

TEST_CASE("json parser rejects malformed inputs") {
  BuiltPreset p = build_preset("sweedler");
  json j = hopf_to_json(*p.finite);
  json bad = j;
  bad["mul"][0][0] = 99; // index out of range
  CHECK_THROWS_AS(hopf_from_json(bad), Error);
  bad = j;
  bad["unit"] = json::array({"1"});
  CHECK_THROWS_AS(hopf_from_json(bad), Error);
  bad = j;
  bad["counit"][0] = json::array({0, "1", "2"});
  CHECK_THROWS_AS(hopf_from_json(bad), Error);
}

TEST_CASE("tensor report carries the lcm law") {
  FieldPtr q6 = FieldSpec::cyclotomic(Q(), 6);
  FiniteHopfAlgebra t3 = taft_finite(q6, 3);
  FiniteHopfAlgebra sw = sweedler_algebra(q6);
  json doc = report_tensor(t3, sw, "t", 100);
  CHECK(doc["io_lcm_law"]["io_left"] == 3);
  CHECK(doc["io_lcm_law"]["io_right"] == 2);
  CHECK(doc["io_lcm_law"]["io_tensor"] == 6);
  CHECK(doc["io_lcm_law"]["lcm_law_holds"].get<bool>());
  CHECK(doc["sigma_r_is_tensor_of_factors"].get<bool>());
}

TEST_CASE("truncation report") {
  BuiltPreset p = build_preset("taft_family(n=3)");
  json doc = report_truncation(*p.family, 4, "t", 100);
  CHECK(doc["dim"] == 12);
  CHECK(doc["radical_layers"] == json::array({3, 3, 3, 3}));
  CHECK(doc["winding_fixed_subalgebra"]["dim"] == 4);
  CHECK(doc["winding_fixed_subalgebra"]["commutative"].get<bool>());
  CHECK(doc["winding_fixed_subalgebra"]["basis"] ==
        json::array({"1", "x", "x^2", "x^3"}));
}

TEST_CASE("text rendering mentions the key fields") {
  BuiltPreset p = build_preset("sweedler");
  json doc = report_finite(*p.finite, p.descriptor, p.golden, 1000);
  std::string text = render_text(doc);
  CHECK(text.find("io: 2") != std::string::npos);
  CHECK(text.find("unimodular: false") != std::string::npos);
  CHECK(text.find("radical_dim: 2") != std::string::npos);
}

TEST_CASE("pi degree field for families with a closed form") {
  BuiltPreset taft = build_preset("taft_family(n=5)");
  json a = report_family(*taft.family, taft.descriptor, taft.golden, 100);
  CHECK(a["pi_degree"] == 5);
  CHECK(a["io_equals_pi_degree"].get<bool>());

  // one GK-dimension up, io = 1 while the PI degree stays 2
  BuiltPreset e85 = build_preset("example85");
  json b = report_family(*e85.family, e85.descriptor, e85.golden, 100);
  CHECK(b["pi_degree"] == 2);
  CHECK_FALSE(b["io_equals_pi_degree"].get<bool>());

  // no closed form declared for the enveloping algebra
  BuiltPreset ul = build_preset("solvable_enveloping");
  json c = report_family(*ul.family, ul.descriptor, ul.golden, 100);
  CHECK_FALSE(c.contains("pi_degree"));
}
