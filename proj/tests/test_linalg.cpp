#include <doctest.h>

#include "hopfint/linalg.hpp"

using namespace hopfint;

namespace {

struct Rng {
  unsigned long long s;
  explicit Rng(unsigned long long seed) : s(seed) {}
  unsigned long long next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

Matrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, Rng& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = Scalar::from_int(f, (long)(rng.next() % 11) - 5);
  return m;
}

} // namespace

TEST_CASE("rref basics") {
  FieldPtr q = FieldSpec::rationals();
  RrefResult id = rref_and_nullspace(Matrix::identity(q, 2));
  CHECK(id.rank == 2);
  CHECK(id.kernel.dim() == 0);

  Matrix m(q, 1, 2);
  m.at(0, 0) = Scalar::one(q);
  m.at(0, 1) = -Scalar::one(q);
  RrefResult r = rref_and_nullspace(m);
  CHECK(r.rank == 1);
  REQUIRE(r.kernel.dim() == 1);
  CHECK(r.kernel.basis.row(0) == Vec{Scalar::one(q), Scalar::one(q)});
}

TEST_CASE("kernel vectors multiply to zero") {
  FieldPtr f7 = FieldSpec::prime(7);
  Rng rng(7);
  for (int it = 0; it < 10; ++it) {
    Matrix m = random_matrix(f7, 5, 5, rng);
    RrefResult r = rref_and_nullspace(m);
    CHECK(r.rank + r.kernel.dim() == 5);
    for (std::size_t i = 0; i < r.kernel.dim(); ++i)
      CHECK(is_zero_vec(matvec(m, r.kernel.basis.row(i))));
    // rref is idempotent
    Matrix again = r.rref;
    rref_in_place(again);
    CHECK(again == r.rref);
  }
}

TEST_CASE("parallel kernels match the serial reference") {
  Rng rng(99);
  for (const FieldPtr& f :
       {FieldSpec::rationals(), FieldSpec::prime(10007),
        FieldSpec::cyclotomic(FieldSpec::rationals(), 4)}) {
    Matrix a = random_matrix(f, 17, 23, rng);
    Matrix b = random_matrix(f, 23, 11, rng);
    CHECK(matmul(a, b) == matmul_serial(a, b));
    Matrix e1 = a, e2 = a;
    rref_in_place(e1);
    rref_in_place_serial(e2);
    CHECK(e1 == e2);
    Matrix ka = random_matrix(f, 4, 3, rng);
    Matrix kb = random_matrix(f, 3, 5, rng);
    CHECK(kronecker(ka, kb) == kronecker_serial(ka, kb));
  }
}

TEST_CASE("subspace operations") {
  FieldPtr q = FieldSpec::rationals();
  auto e = [&](std::size_t i) { return unit_vec(q, 3, i); };
  Subspace a = row_space(q, 3, {e(0), e(1)});
  Subspace b = row_space(q, 3, {e(1), e(2)});
  Subspace cap = subspace_intersect(a, b);
  CHECK(cap.dim() == 1);
  CHECK(subspace_member(cap, e(1)));
  CHECK(subspace_intersect(a, a) == a);
  CHECK(subspace_sum(a, b).dim() == 3);
  CHECK(subspace_contains(a, cap));
  CHECK_FALSE(subspace_contains(cap, a));

  // kernels of the two characters of k[Z2]: g -> 1 and g -> -1
  Vec chi1{Scalar::one(q), Scalar::one(q)};
  Vec chi2{Scalar::one(q), -Scalar::one(q)};
  Subspace k1 = rref_and_nullspace(Matrix::from_rows(q, {chi1})).kernel;
  Subspace k2 = rref_and_nullspace(Matrix::from_rows(q, {chi2})).kernel;
  CHECK(k1.dim() == 1);
  CHECK(k2.dim() == 1);
  CHECK(subspace_intersect(k1, k2).dim() == 0);
}

TEST_CASE("grassmann identity on random subspaces") {
  FieldPtr f5 = FieldSpec::prime(5);
  Rng rng(3);
  for (int it = 0; it < 20; ++it) {
    std::size_t n = 6;
    std::vector<Vec> rows_a, rows_b;
    for (int i = 0; i < 3; ++i) {
      rows_a.push_back(random_matrix(f5, 1, n, rng).row(0));
      rows_b.push_back(random_matrix(f5, 1, n, rng).row(0));
    }
    Subspace a = row_space(f5, n, rows_a);
    Subspace b = row_space(f5, n, rows_b);
    CHECK(a.dim() + b.dim() ==
          subspace_sum(a, b).dim() + subspace_intersect(a, b).dim());
  }
}

TEST_CASE("member oracle agrees with row reduction") {
  FieldPtr q = FieldSpec::rationals();
  Rng rng(17);
  Subspace s = row_space(q, 5, {random_matrix(q, 1, 5, rng).row(0),
                                random_matrix(q, 1, 5, rng).row(0)});
  MemberOracle oracle(s);
  for (int it = 0; it < 20; ++it) {
    Vec v = random_matrix(q, 1, 5, rng).row(0);
    CHECK(oracle.contains(v) == subspace_member(s, v));
  }
  CHECK(oracle.contains(s.basis.row(0)));
}

TEST_CASE("matrix order") {
  FieldPtr q = FieldSpec::rationals();
  CHECK(*matrix_order(Matrix::identity(q, 3), 10) == 1);
  Matrix swap(q, 2, 2);
  swap.at(0, 1) = Scalar::one(q);
  swap.at(1, 0) = Scalar::one(q);
  CHECK(*matrix_order(swap, 10) == 2);
  Matrix shear = Matrix::identity(q, 2);
  shear.at(0, 1) = Scalar::one(q);
  CHECK_FALSE(matrix_order(shear, 25).has_value());
  Matrix sing(q, 2, 2);
  CHECK_THROWS_AS(matrix_order(sing, 10), Error);
}

TEST_CASE("kronecker product") {
  FieldPtr q = FieldSpec::rationals();
  CHECK(kronecker(Matrix::identity(q, 2), Matrix::identity(q, 3)) ==
        Matrix::identity(q, 6));
  Matrix swap(q, 2, 2);
  swap.at(0, 1) = Scalar::one(q);
  swap.at(1, 0) = Scalar::one(q);
  Matrix block = kronecker(swap, Matrix::identity(q, 2));
  CHECK(block.at(0, 2).is_one());
  CHECK(block.at(1, 3).is_one());
  CHECK(block.at(2, 0).is_one());
  CHECK(block.at(3, 1).is_one());

  // mixed product on random 2x2
  Rng rng(5);
  for (int it = 0; it < 10; ++it) {
    Matrix a = random_matrix(q, 2, 2, rng), b = random_matrix(q, 2, 2, rng);
    Matrix c = random_matrix(q, 2, 2, rng), d = random_matrix(q, 2, 2, rng);
    CHECK(matmul(kronecker(a, b), kronecker(c, d)) ==
          kronecker(matmul(a, c), matmul(b, d)));
  }
}

TEST_CASE("solve and inverse") {
  FieldPtr q = FieldSpec::rationals();
  Rng rng(11);
  for (int it = 0; it < 10; ++it) {
    Matrix m = random_matrix(q, 4, 4, rng);
    if (rank(m) < 4) continue;
    Matrix inv = inverse(m);
    CHECK(matmul(m, inv) == Matrix::identity(q, 4));
    Vec b = random_matrix(q, 1, 4, rng).row(0);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(matvec(m, *x) == b);
  }
  // inconsistent system
  Matrix m(q, 2, 1);
  m.at(0, 0) = Scalar::one(q);
  CHECK_FALSE(solve(m, Vec{Scalar::zero(q), Scalar::one(q)}).has_value());
}
