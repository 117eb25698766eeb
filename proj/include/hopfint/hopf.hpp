#ifndef HOPFINT_HOPF_HPP
#define HOPFINT_HOPF_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopfint/algebra.hpp"

namespace hopfint {

/// One term of a coproduct: Delta(e_i) contains c * e_j (x) e_k.
struct CoprodTerm {
  std::size_t j, k;
  Scalar c;
};

/// Finite-dimensional Hopf algebra: structure constants for product and
/// coproduct, counit covector, antipode matrix (column i = coords of S(e_i)).
struct FiniteHopfAlgebra {
  FiniteAlgebra alg;
  std::vector<std::vector<CoprodTerm>> comul;
  Vec counit;
  Matrix antipode;

  std::size_t dim() const { return alg.dim; }
  const FieldPtr& field() const { return alg.field; }
};

/// Sparse element of the tensor square, keyed by a*dim + b.
using Tensor2 = std::map<std::size_t, Scalar>;

Tensor2 delta_of(const FiniteHopfAlgebra& h, const Vec& v);
/// Componentwise product in A (x) A.
Tensor2 tensor2_product(const FiniteAlgebra& alg, const Tensor2& x,
                        const Tensor2& y);

struct AxiomReport {
  struct Item {
    std::string name;
    bool passed;
    std::string witness; // empty when passed
  };
  std::vector<Item> items;
  bool all_passed() const {
    for (const auto& i : items)
      if (!i.passed) return false;
    return true;
  }
};

/// Checks every Hopf axiom exactly: algebra, coassociativity, counit law,
/// bialgebra compatibility of coproduct and counit, the antipode axiom and
/// the anti-homomorphism property. Failures are data, not errors.
AxiomReport verify_axioms(const FiniteHopfAlgebra& h);

/// Tensor product Hopf algebra, index convention (i,j) -> i*dim(K)+j
/// matching the Kronecker product. The construction preserves every axiom
/// of the factors; verify_axioms stays cheap to run on the result when
/// wanted (the test suite does).
FiniteHopfAlgebra tensor_hopf(const FiniteHopfAlgebra& h,
                              const FiniteHopfAlgebra& k);

/// Dual Hopf algebra on the dual basis (product = transposed coproduct and
/// vice versa); axiom-verified.
FiniteHopfAlgebra dual_hopf(const FiniteHopfAlgebra& h);

/// Coefficientwise coercion into an extension field.
FiniteHopfAlgebra base_change(const FiniteHopfAlgebra& h, const FieldPtr& target);

/// Algebra-homomorphism covectors H -> k; carriers of 1-dimensional modules.
struct Character {
  Vec values;
  bool operator==(const Character& o) const { return values == o.values; }
  bool operator!=(const Character& o) const { return !(*this == o); }
};

bool is_character(const FiniteHopfAlgebra& h, const Vec& phi);
Character counit_character(const FiniteHopfAlgebra& h);
/// Convolution product; asserts the result is again a character.
Character convolution(const FiniteHopfAlgebra& h, const Character& a,
                      const Character& b);
/// Smallest n <= cap with phi^{*n} = counit.
std::optional<unsigned long> convolution_order(const FiniteHopfAlgebra& h,
                                               const Character& phi,
                                               unsigned long cap = 10000);
/// phi composed with a linear map (e.g. the antipode): x -> phi(M x).
Character character_compose(const Character& phi, const Matrix& m);

/// True iff f is unital, multiplicative, comultiplicative, counital and
/// commutes with the antipodes. Never searches for isomorphisms.
bool verify_hopf_morphism(const Matrix& f, const FiniteHopfAlgebra& h,
                          const FiniteHopfAlgebra& k);

} // namespace hopfint

#endif
