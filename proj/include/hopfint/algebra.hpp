#ifndef HOPFINT_ALGEBRA_HPP
#define HOPFINT_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfint/linalg.hpp"

namespace hopfint {

/// Sparse row: (index, coefficient) pairs sorted by index, no zeros.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const FieldPtr& f, std::size_t n, const SparseVec& s);
/// Sort by index, merge duplicates, drop zeros.
SparseVec canonical_sparse(std::vector<std::pair<std::size_t, Scalar>> terms);

/// Finite-dimensional associative unital algebra given by structure
/// constants e_i * e_j = sum_k c_{ij}^k e_k (stored sparse per (i,j)).
struct FiniteAlgebra {
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<std::string> basis_labels;
  Vec unit;
  std::vector<SparseVec> mul; // index i*dim + j

  const SparseVec& mul_entry(std::size_t i, std::size_t j) const {
    return mul[i * dim + j];
  }
  /// Product of arbitrary elements (coordinate vectors).
  Vec product(const Vec& a, const Vec& b) const;
  std::string label(std::size_t i) const {
    return i < basis_labels.size() ? basis_labels[i] : "e" + std::to_string(i);
  }
};

/// Checks associativity on all basis triples and both unit laws; returns a
/// witness string on failure.
std::optional<std::string> check_algebra_axioms(const FiniteAlgebra& a);

/// Two-sided ideal, stored as its subspace; construction routines guarantee
/// closure under both multiplications.
struct IdealHandle {
  Subspace space;
  std::size_t dim() const { return space.dim(); }
};

Matrix left_mult_matrix(const FiniteAlgebra& a, const Vec& x);
Matrix right_mult_matrix(const FiniteAlgebra& a, const Vec& x);

/// Smallest two-sided ideal containing the generators (saturation by basis
/// multiplications, index order, left then right, until stable).
IdealHandle ideal_generated(const FiniteAlgebra& a, const std::vector<Vec>& gens);

bool is_ideal(const FiniteAlgebra& a, const Subspace& s);

/// Largest two-sided ideal contained in the subspace.
Subspace largest_ideal_inside(const FiniteAlgebra& a, const Subspace& s);

struct QuotientAlgebra {
  FiniteAlgebra algebra;
  Matrix projection;                    // (dim A - dim I) x dim A
  std::vector<std::size_t> section;     // complement basis indices in A
};

/// Quotient by a proper two-sided ideal; complement basis = non-pivot
/// coordinates of the ideal's echelon basis.
QuotientAlgebra quotient_algebra(const FiniteAlgebra& a, const IdealHandle& i);

IdealHandle commutator_ideal(const FiniteAlgebra& a);

/// Radical via the trace-form / Dickson criterion; requires char 0 or
/// char p > dim. Throws UNSUPPORTED_CHARACTERISTIC otherwise.
Subspace jacobson_radical(const FiniteAlgebra& a);
bool radical_supported(const FiniteAlgebra& a);

/// Joint fixed subspace of verified algebra automorphisms; asserted unital
/// and multiplicatively closed.
Subspace fixed_subalgebra(const FiniteAlgebra& a, const std::vector<Matrix>& autos);

bool is_algebra_automorphism(const FiniteAlgebra& a, const Matrix& m);
bool is_commutative(const FiniteAlgebra& a);
Subspace center(const FiniteAlgebra& a);

/// Does the subspace, as a set of elements, commute and close under product?
bool subspace_multiplicatively_closed(const FiniteAlgebra& a, const Subspace& s);
bool subspace_commutative(const FiniteAlgebra& a, const Subspace& s);

/// Span of pairwise products of two subspaces (used for radical powers).
Subspace subspace_product(const FiniteAlgebra& a, const Subspace& x, const Subspace& y);

} // namespace hopfint

#endif
