#include <doctest.h>

#include "hopfint/algebra.hpp"
#include "hopfint/presets.hpp"

using namespace hopfint;

namespace {

FieldPtr Q() { return FieldSpec::rationals(); }

// Sweedler algebra basis order: 1, x, g, g*x
FiniteAlgebra sweedler_alg() { return sweedler_algebra(Q()).alg; }

// 2x2 matrix algebra with basis E11, E12, E21, E22
FiniteAlgebra mat2() {
  FiniteAlgebra a;
  a.field = Q();
  a.dim = 4;
  a.basis_labels = {"E11", "E12", "E21", "E22"};
  a.unit = zero_vec(Q(), 4);
  a.unit[0] = a.unit[3] = Scalar::one(Q());
  a.mul.assign(16, SparseVec{});
  auto idx = [](std::size_t r, std::size_t c) { return r * 2 + c; };
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          if (j == k)
            a.mul[idx(i, j) * 4 + idx(k, l)] = {{idx(i, l), Scalar::one(Q())}};
  return a;
}

FiniteAlgebra truncated_poly3() {
  // k[x]/(x^3), basis 1, x, x^2
  FiniteAlgebra a;
  a.field = Q();
  a.dim = 3;
  a.basis_labels = {"1", "x", "x^2"};
  a.unit = unit_vec(Q(), 3, 0);
  a.mul.assign(9, SparseVec{});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i + j < 3) a.mul[i * 3 + j] = {{i + j, Scalar::one(Q())}};
  return a;
}

} // namespace

TEST_CASE("multiplication matrices") {
  FiniteAlgebra kz2 = cyclic_group_algebra(Q(), 2).alg;
  CHECK(left_mult_matrix(kz2, kz2.unit) == Matrix::identity(Q(), 2));
  Matrix lg = left_mult_matrix(kz2, unit_vec(Q(), 2, 1));
  CHECK(lg.at(0, 1).is_one());
  CHECK(lg.at(1, 0).is_one());
  CHECK(lg.at(0, 0).is_zero());

  // L_a L_b = L_{ab} on pseudo-random Sweedler elements
  FiniteAlgebra sw = sweedler_alg();
  for (long seed = 1; seed < 6; ++seed) {
    Vec a = zero_vec(Q(), 4), b = zero_vec(Q(), 4);
    for (std::size_t i = 0; i < 4; ++i) {
      a[i] = Scalar::from_int(Q(), (seed * 7 + (long)i * 3) % 5 - 2);
      b[i] = Scalar::from_int(Q(), (seed * 11 + (long)i * 5) % 7 - 3);
    }
    CHECK(matmul(left_mult_matrix(sw, a), left_mult_matrix(sw, b)) ==
          left_mult_matrix(sw, sw.product(a, b)));
    CHECK(matmul(right_mult_matrix(sw, b), right_mult_matrix(sw, a)) ==
          right_mult_matrix(sw, sw.product(a, b)));
  }
}

TEST_CASE("ideal generation and saturation") {
  FiniteAlgebra sw = sweedler_alg();
  CHECK(ideal_generated(sw, {sw.unit}).dim() == 4);
  CHECK(ideal_generated(sw, {}).dim() == 0);

  // brute-force oracle: span{x, g*x} is closed under both multiplications
  Vec x = unit_vec(Q(), 4, 1);
  IdealHandle ix = ideal_generated(sw, {x});
  CHECK(ix.dim() == 2);
  CHECK(subspace_member(ix.space, unit_vec(Q(), 4, 3)));
  CHECK(is_ideal(sw, ix.space));
}

TEST_CASE("quotient algebra") {
  FiniteAlgebra sw = sweedler_alg();
  QuotientAlgebra triv = quotient_algebra(sw, ideal_generated(sw, {}));
  CHECK(triv.algebra.dim == 4);
  CHECK_FALSE(check_algebra_axioms(triv.algebra).has_value());

  // Sweedler / (x) is the group algebra of Z2
  QuotientAlgebra q = quotient_algebra(sw, ideal_generated(sw, {unit_vec(Q(), 4, 1)}));
  CHECK(q.algebra.dim == 2);
  CHECK(is_commutative(q.algebra));
  // projection is multiplicative on all basis pairs
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Vec pij = matvec(q.projection,
                       sw.product(unit_vec(Q(), 4, i), unit_vec(Q(), 4, j)));
      Vec pi = matvec(q.projection, unit_vec(Q(), 4, i));
      Vec pj = matvec(q.projection, unit_vec(Q(), 4, j));
      CHECK(pij == q.algebra.product(pi, pj));
    }

  // kZ4 / (g^2 - 1) = kZ2
  FiniteAlgebra kz4 = cyclic_group_algebra(Q(), 4).alg;
  Vec rel = sub(unit_vec(Q(), 4, 2), unit_vec(Q(), 4, 0));
  QuotientAlgebra q2 = quotient_algebra(kz4, ideal_generated(kz4, {rel}));
  CHECK(q2.algebra.dim == 2);
  CHECK(is_commutative(q2.algebra));
  Vec gbar = matvec(q2.projection, unit_vec(Q(), 4, 1));
  CHECK(q2.algebra.product(gbar, gbar) == q2.algebra.unit);

  CHECK_THROWS_AS(quotient_algebra(sw, ideal_generated(sw, {sw.unit})), Error);
}

TEST_CASE("commutator ideal") {
  FiniteAlgebra klein = klein_four_algebra(Q()).alg;
  CHECK(commutator_ideal(klein).dim() == 0);

  FiniteAlgebra sw = sweedler_alg();
  IdealHandle c = commutator_ideal(sw);
  CHECK(c.dim() == 2);
  CHECK(quotient_algebra(sw, c).algebra.dim == 2);

  // M2(k) is simple, so its commutators generate everything and the
  // commutative quotient collapses to 0 (oracle: E12 = [E11,E12],
  // E21 = [E21,E11], then E12*E21 = E11 and E21*E12 = E22)
  FiniteAlgebra m2 = mat2();
  IdealHandle cm = commutator_ideal(m2);
  CHECK(cm.dim() == 4);
  CHECK_THROWS_AS(quotient_algebra(m2, cm), Error);
}

TEST_CASE("jacobson radical") {
  CHECK(jacobson_radical(cyclic_group_algebra(Q(), 2).alg).dim() == 0);

  FiniteAlgebra sw = sweedler_alg();
  Subspace rad = jacobson_radical(sw);
  CHECK(rad.dim() == 2);
  CHECK(subspace_member(rad, unit_vec(Q(), 4, 1)));
  CHECK(subspace_member(rad, unit_vec(Q(), 4, 3)));
  // nilpotent: saturation power reaches 0 within dim steps
  Subspace p = rad;
  std::size_t steps = 0;
  while (p.dim() > 0 && steps <= sw.dim) {
    p = subspace_product(sw, p, rad);
    ++steps;
  }
  CHECK(p.dim() == 0);

  Subspace rad3 = jacobson_radical(truncated_poly3());
  CHECK(rad3.dim() == 2);
  CHECK(subspace_member(rad3, unit_vec(Q(), 3, 1)));
  CHECK(subspace_member(rad3, unit_vec(Q(), 3, 2)));

  CHECK(jacobson_radical(mat2()).dim() == 0);

  FiniteAlgebra kz2_f2 = cyclic_group_algebra(FieldSpec::prime(2), 2).alg;
  CHECK_FALSE(radical_supported(kz2_f2));
  CHECK_THROWS_AS(jacobson_radical(kz2_f2), Error);
}

TEST_CASE("fixed subalgebra") {
  FiniteAlgebra kz2 = cyclic_group_algebra(Q(), 2).alg;
  Subspace whole = fixed_subalgebra(kz2, {Matrix::identity(Q(), 2)});
  CHECK(whole.dim() == 2);

  // sign swap g -> -g on k[g]/(g^2 - 1)
  Matrix swap = Matrix::identity(Q(), 2);
  swap.at(1, 1) = -Scalar::one(Q());
  Subspace fixed = fixed_subalgebra(kz2, {swap});
  CHECK(fixed.dim() == 1);
  CHECK(subspace_member(fixed, kz2.unit));

  Matrix bad(Q(), 2, 2);
  bad.at(0, 0) = Scalar::one(Q());
  CHECK_THROWS_AS(fixed_subalgebra(kz2, {bad}), Error);
}

TEST_CASE("commutativity and center") {
  CHECK(is_commutative(klein_four_algebra(Q()).alg));
  CHECK(center(klein_four_algebra(Q()).alg).dim() == 4);

  FiniteAlgebra sw = sweedler_alg();
  CHECK_FALSE(is_commutative(sw));
  Subspace z = center(sw);
  CHECK(z.dim() == 1);
  CHECK(subspace_member(z, sw.unit));

  FiniteAlgebra taft3 = taft_finite(FieldSpec::cyclotomic(Q(), 3), 3).alg;
  Subspace z3 = center(taft3);
  CHECK(z3.dim() == 1);
  CHECK(subspace_member(z3, taft3.unit));
}

TEST_CASE("largest ideal inside a subspace") {
  FiniteAlgebra sw = sweedler_alg();
  // span{x, g} is not an ideal; the largest ideal inside it is span{?}
  Subspace s = row_space(Q(), 4, {unit_vec(Q(), 4, 1), unit_vec(Q(), 4, 2)});
  Subspace inside = largest_ideal_inside(sw, s);
  CHECK(is_ideal(sw, inside));
  CHECK(subspace_contains(s, inside));
}
