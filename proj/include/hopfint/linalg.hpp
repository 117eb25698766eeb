#ifndef HOPFINT_LINALG_HPP
#define HOPFINT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfint/scalar.hpp"

namespace hopfint {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over a fixed FieldSpec. Value semantics, all
/// arithmetic exact.
class Matrix {
public:
  Matrix() = default;
  Matrix(const FieldPtr& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldPtr& f, std::size_t n);
  static Matrix from_rows(const FieldPtr& f, const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return e_[r * cols_ + c];
  }

  Vec row(std::size_t r) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  Matrix transpose() const;
  std::string to_string() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  FieldPtr field_;
  std::vector<Scalar> e_;
};

/// Subspace of k^n stored as its unique reduced-echelon row basis.
struct Subspace {
  std::size_t ambient = 0;
  Matrix basis; // RREF, no zero rows; dim() == basis.rows()

  std::size_t dim() const { return basis.rows(); }
  bool operator==(const Subspace& o) const {
    return ambient == o.ambient && basis == o.basis;
  }
};

// --- kernels: OpenMP-parallel entry points with serial references kept for
// --- testing. Results are identical (elimination steps are row-independent).

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix matmul_serial(const Matrix& a, const Matrix& b);
Vec matvec(const Matrix& a, const Vec& x);
Vec vecmat(const Vec& x, const Matrix& a); // row-covector times matrix

/// In-place reduced row echelon form; returns the pivot columns (leftmost
/// pivot, topmost row convention).
std::vector<std::size_t> rref_in_place(Matrix& m);
std::vector<std::size_t> rref_in_place_serial(Matrix& m);

/// Kronecker product with index convention (i,j) -> i*rows(B)+j on rows and
/// (k,l) -> k*cols(B)+l on columns; the same convention indexes tensor
/// product Hopf algebras.
Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix kronecker_serial(const Matrix& a, const Matrix& b);

// --- derived operations ---

struct RrefResult {
  Matrix rref;
  std::size_t rank = 0;
  Subspace kernel; // right null space {v : M v = 0}
};
RrefResult rref_and_nullspace(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Subspace spanned by the given row vectors (echelonized).
Subspace row_space(const FieldPtr& f, std::size_t ambient,
                   const std::vector<Vec>& rows);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Intersection via the kernel of stacked annihilator conditions.
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, const Subspace& b); // b <= a?
bool subspace_member(const Subspace& a, const Vec& v);

/// Precomputed membership test: v is in S iff the annihilator rows kill v.
/// O((ambient - dim) * ambient) per query, much faster than row reduction
/// for large subspaces.
class MemberOracle {
public:
  explicit MemberOracle(const Subspace& s);
  bool contains(const Vec& v) const;

private:
  Matrix ann_;
};
/// Coordinates of v in a's echelon basis; nullopt when v is not a member.
std::optional<Vec> subspace_coords(const Subspace& a, const Vec& v);

/// Smallest n <= cap with M^n = I, nullopt on cap. Throws NOT_INVERTIBLE.
std::optional<unsigned long> matrix_order(const Matrix& m,
                                          unsigned long cap = 10000);

/// Solve M x = b; nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
/// Inverse of a square invertible matrix. Throws NOT_INVERTIBLE.
Matrix inverse(const Matrix& m);

// convenience vector helpers
Vec zero_vec(const FieldPtr& f, std::size_t n);
Vec unit_vec(const FieldPtr& f, std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& a);
Scalar dot(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);

} // namespace hopfint

#endif
