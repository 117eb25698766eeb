#include <doctest.h>

#include "hopfint/presets.hpp"
#include "hopfint/quotients.hpp"

using namespace hopfint;

namespace {
FieldPtr Q() { return FieldSpec::rationals(); }
}

TEST_CASE("hopf ideal check") {
  FiniteHopfAlgebra sw = sweedler_algebra(Q());
  CHECK(hopf_ideal_check(sw, ideal_generated(sw.alg, {})));

  // (x) is a Hopf ideal: Delta(x) = x(x)1 + g(x)x
  IdealHandle ix = ideal_generated(sw.alg, {unit_vec(Q(), 4, 1)});
  CHECK(hopf_ideal_check(sw, ix));

  // (g-1) is the whole augmentation ideal, hence a Hopf ideal:
  // Delta(g-1) = (g-1)(x)g + 1(x)(g-1)
  Vec gm1 = sub(unit_vec(Q(), 4, 2), unit_vec(Q(), 4, 0));
  IdealHandle ig = ideal_generated(sw.alg, {gm1});
  CHECK(ig.dim() == 3);
  CHECK(hopf_ideal_check(sw, ig));

  // the span of the left integral x + g*x is a two-sided ideal but NOT a
  // Hopf ideal: S swaps left and right integrals, so S(I) leaves I
  Vec tl = add(unit_vec(Q(), 4, 1), unit_vec(Q(), 4, 3));
  Subspace span_tl = row_space(Q(), 4, {tl});
  REQUIRE(is_ideal(sw.alg, span_tl));
  CHECK_FALSE(hopf_ideal_check(sw, IdealHandle{span_tl}));
  CHECK_THROWS_AS(hopf_quotient(sw, IdealHandle{span_tl}), Error);
}

TEST_CASE("abelianization") {
  FiniteHopfAlgebra klein = klein_four_algebra(Q());
  HopfQuotientResult a = abelianization(klein);
  CHECK(a.quotient.dim() == 4);
  CHECK(verify_hopf_morphism(a.projection, klein, a.quotient));

  FiniteHopfAlgebra sw = sweedler_algebra(Q());
  HopfQuotientResult b = abelianization(sw);
  CHECK(b.quotient.dim() == 2);
  CHECK(is_commutative(b.quotient.alg));
  CHECK(verify_axioms(b.quotient).all_passed());
  // the quotient is the group algebra of Z2: image of g squares to 1
  Vec gbar = matvec(b.projection, unit_vec(Q(), 4, 2));
  CHECK(b.quotient.alg.product(gbar, gbar) == b.quotient.alg.unit);

  FieldPtr q3 = FieldSpec::cyclotomic(Q(), 3);
  HopfQuotientResult c = abelianization(taft_finite(q3, 3));
  CHECK(c.quotient.dim() == 3);
}

TEST_CASE("integral quotient") {
  // unimodular: H_iq = k
  HopfQuotientResult a = integral_quotient(klein_four_algebra(Q()));
  CHECK(a.quotient.dim() == 1);

  FiniteHopfAlgebra sw = sweedler_algebra(Q());
  HopfQuotientResult b = integral_quotient(sw);
  CHECK(b.quotient.dim() == 2);
  CHECK(b.kernel.dim() == 2);
  CHECK(is_commutative(b.quotient.alg));
  CHECK(verify_axioms(b.quotient).all_passed());
  CHECK(hopf_ideal_check(sw, b.kernel));

  FieldPtr q3 = FieldSpec::cyclotomic(Q(), 3);
  FiniteHopfAlgebra t3 = taft_finite(q3, 3);
  HopfQuotientResult c = integral_quotient(t3);
  CHECK(c.quotient.dim() == 3);
  CHECK(is_commutative(c.quotient.alg));
}

TEST_CASE("dim H_iq = io and io divides dim H_ab on all presets") {
  for (const BuiltPreset& p : all_finite_presets()) {
    auto io = integral_order(*p.finite, 100);
    REQUIRE(io.has_value());
    HopfQuotientResult iq = integral_quotient(*p.finite);
    CHECK(iq.quotient.dim() == *io);
    HopfQuotientResult ab = abelianization(*p.finite);
    CHECK(ab.quotient.dim() % *io == 0);
  }
}

TEST_CASE("coinvariants") {
  // trivial quotient H -> k: coinvariants are all of H
  FiniteHopfAlgebra klein = klein_four_algebra(Q());
  HopfQuotientResult triv = integral_quotient(klein);
  CHECK(coinvariants(klein, triv).dim() == 4);

  // Sweedler: coinvariants of H_iq are span{1, x}
  FiniteHopfAlgebra sw = sweedler_algebra(Q());
  HopfQuotientResult iq = integral_quotient(sw);
  Subspace co = coinvariants(sw, iq);
  CHECK(co.dim() == 2);
  CHECK(subspace_member(co, sw.alg.unit));
  CHECK(subspace_member(co, unit_vec(Q(), 4, 1)));
  CHECK_FALSE(subspace_member(co, unit_vec(Q(), 4, 2)));

  // klein four (basis 1, b, a, ab) -> kZ2 killing b: coinvariants are the
  // group algebra of the kernel subgroup {1, b}
  Vec bm1 = sub(unit_vec(Q(), 4, 1), unit_vec(Q(), 4, 0)); // b - 1
  HopfQuotientResult qb = hopf_quotient(klein, ideal_generated(klein.alg, {bm1}));
  CHECK(qb.quotient.dim() == 2);
  Subspace cob = coinvariants(klein, qb);
  CHECK(cob.dim() == 2);
  CHECK(subspace_member(cob, klein.alg.unit));
  CHECK(subspace_member(cob, unit_vec(Q(), 4, 1)));       // b survives
  CHECK_FALSE(subspace_member(cob, unit_vec(Q(), 4, 2))); // a does not
}

TEST_CASE("coinvariants equal winding fixed points") {
  for (const BuiltPreset& p : all_finite_presets()) {
    HopfQuotientResult iq = integral_quotient(*p.finite);
    Subspace co = coinvariants(*p.finite, iq);
    Subspace fx = fixed_subalgebra(p.finite->alg, winding_group(*p.finite));
    CHECK(co == fx);
  }
}

TEST_CASE("base change preserves io, unimodularity and the Maschke flags") {
  FieldPtr q12 = FieldSpec::cyclotomic(Q(), 12);
  for (const BuiltPreset& p : all_finite_presets()) {
    if (p.finite->field()->kind() != field_kind::rational) continue;
    FiniteHopfAlgebra hf = base_change(*p.finite, q12);
    CHECK(integral_order(hf, 100) == integral_order(*p.finite, 100));
    CHECK(is_unimodular(hf) == is_unimodular(*p.finite));
    MaschkeReport before = maschke_report(*p.finite);
    MaschkeReport after = maschke_report(hf);
    CHECK(before.semisimple_by_integral == after.semisimple_by_integral);
    CHECK(before.cond1_holds == after.cond1_holds);
    CHECK(before.radical_dim == after.radical_dim);
    CHECK(coerce(before.epsilon_of_integral, q12) == after.epsilon_of_integral);
  }
  // cyclotomic -> bigger cyclotomic
  FieldPtr q3 = FieldSpec::cyclotomic(Q(), 3);
  FiniteHopfAlgebra t3 = taft_finite(q3, 3);
  CHECK(*integral_order(base_change(t3, q12), 100) == 3);
}

TEST_CASE("a cap below the order raises ORDER_INFINITE") {
  FiniteHopfAlgebra sw = sweedler_algebra(Q());
  try {
    integral_quotient(sw, 1);
    FAIL("expected ORDER_INFINITE");
  } catch (const Error& e) {
    CHECK(e.code() == errc::order_infinite);
  }
}

TEST_CASE("ambient mismatch is rejected") {
  Subspace a = row_space(Q(), 2, {unit_vec(Q(), 2, 0)});
  Subspace b = row_space(Q(), 3, {unit_vec(Q(), 3, 0)});
  CHECK_THROWS_AS(subspace_intersect(a, b), Error);
  CHECK_THROWS_AS(subspace_sum(a, b), Error);
  CHECK_THROWS_AS(subspace_contains(a, b), Error);
}
