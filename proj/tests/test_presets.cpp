#include <doctest.h>

#include "hopfint/integrals.hpp"
#include "hopfint/report.hpp"

using namespace hopfint;

namespace {
FieldPtr Q() { return FieldSpec::rationals(); }
}

TEST_CASE("every finite preset passes verify_axioms") {
  for (const BuiltPreset& p : all_finite_presets()) {
    INFO(p.descriptor);
    CHECK(verify_axioms(*p.finite).all_passed());
  }
}

TEST_CASE("every family preset passes verify_chain") {
  for (const BuiltPreset& p : all_family_presets()) {
    INFO(p.descriptor);
    CHECK(verify_chain(*p.family).ok());
  }
}

TEST_CASE("golden records match the computed reports") {
  for (const BuiltPreset& p : all_finite_presets()) {
    json doc = report_finite(*p.finite, p.descriptor, p.golden, 1000);
    INFO(p.descriptor);
    for (const auto& row : doc["golden"]) {
      INFO(row.dump());
      CHECK(row["match"].get<bool>());
    }
  }
  for (const BuiltPreset& p : all_family_presets()) {
    json doc = report_family(*p.family, p.descriptor, p.golden, 300);
    INFO(p.descriptor);
    for (const auto& row : doc["golden"]) {
      INFO(row.dump());
      CHECK(row["match"].get<bool>());
    }
  }
}

TEST_CASE("preset grammar") {
  CHECK(build_preset("preset:sweedler").finite.has_value());
  CHECK(build_preset("group_algebra(z3)").finite->dim() == 3);
  CHECK(build_preset("group_algebra(n=4)").finite->dim() == 4);
  CHECK(build_preset("taft_finite(n=2)").finite->dim() == 4);
  CHECK(build_preset("taft_family(n=5,m=1,t=1)").family != nullptr);
  CHECK_THROWS_AS(build_preset("nonsense"), Error);
  CHECK_THROWS_AS(build_preset("taft_finite"), Error);       // missing n
  CHECK_THROWS_AS(build_preset("group_algebra(n=x)"), Error);
  CHECK_THROWS_AS(build_preset("sweedler("), Error);
}

TEST_CASE("taft_finite validates the root of unity") {
  // over Q there is no primitive 3rd root
  CHECK_THROWS_AS(build_preset("taft_finite(n=3)", Q()), Error);
  // xi^{mt} = -1 has order 2 != 4, so (x^4) is not a Hopf ideal
  FieldPtr q4 = FieldSpec::cyclotomic(Q(), 4);
  CHECK_THROWS_AS(taft_finite(q4, 4, 2, 1), Error);
  CHECK_NOTHROW(taft_finite(q4, 4, 1, 1));
}

TEST_CASE("sweedler is taft at n=2") {
  FiniteHopfAlgebra sw = sweedler_algebra(Q());
  FiniteHopfAlgebra t2 = taft_finite(Q(), 2, 1, 1);
  CHECK(sw.alg.mul == t2.alg.mul);
  CHECK(sw.antipode == t2.antipode);
}

TEST_CASE("group algebra from an explicit table") {
  // S3 given by its multiplication table; nonabelian but unimodular
  auto mul = [](int a, int b) {
    // permutations of {0,1,2} indexed 0..5: id, (01), (02), (12), (012), (021)
    auto apply = [](int p, int x) {
      switch (p) {
      case 0: return x;
      case 1: return x == 0 ? 1 : x == 1 ? 0 : 2;
      case 2: return x == 0 ? 2 : x == 2 ? 0 : 1;
      case 3: return x == 1 ? 2 : x == 2 ? 1 : 0;
      case 4: return x == 0 ? 1 : x == 1 ? 2 : 0;
      default: return x == 0 ? 2 : x == 2 ? 1 : 0;
      }
    };
    for (int c = 0; c < 6; ++c) {
      bool same = true;
      for (int x = 0; x < 3; ++x)
        if (apply(c, x) != apply(a, apply(b, x))) same = false;
      if (same) return c;
    }
    return -1;
  };
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) table[i][j] = (std::size_t)mul(i, j);
  std::vector<std::string> labels = {"e", "s01", "s02", "s12", "c3", "c3^2"};
  FiniteHopfAlgebra s3 = group_algebra_from_table(Q(), labels, table);
  CHECK(verify_axioms(s3).all_passed());
  CHECK_FALSE(is_commutative(s3.alg));
  CHECK(is_unimodular(s3));
  CHECK(*integral_order(s3, 10) == 1);
  MaschkeReport m = maschke_report(s3);
  CHECK(m.semisimple_by_integral);
  CHECK(m.epsilon_of_integral == Scalar::from_int(Q(), 6));

  // a broken table is rejected
  table[0][0] = 1;
  CHECK_THROWS_AS(group_algebra_from_table(Q(), labels, table), Error);
}

TEST_CASE("field spec parser") {
  CHECK(parse_field_spec("q")->kind() == field_kind::rational);
  CHECK(parse_field_spec("fp:7")->characteristic() == 7);
  FieldPtr q6 = parse_field_spec("Q(z6)");
  CHECK(q6->kind() == field_kind::cyclotomic);
  CHECK(q6->cyclotomic_order() == 6);
  CHECK(parse_field_spec("fp:5(z4)")->extension_degree() == 1); // -1 = 2^2 mod 5
  CHECK(parse_field_spec("fp:7(z4)")->extension_degree() == 2);
  CHECK_THROWS_AS(parse_field_spec("r"), Error);
  CHECK_THROWS_AS(parse_field_spec("fp:4"), Error);
}

TEST_CASE("circle variant H_xi") {
  Scalar xi = Scalar::from_int(Q(), 2);
  FiniteHopfAlgebra h = circle_hopf(Q(), xi);
  CHECK(verify_axioms(h).all_passed());
  CHECK(is_unimodular(h));
  CHECK_THROWS_AS(circle_hopf(Q(), Scalar::zero(Q())), Error);
}
