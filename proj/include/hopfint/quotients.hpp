#ifndef HOPFINT_QUOTIENTS_HPP
#define HOPFINT_QUOTIENTS_HPP

#include "hopfint/integrals.hpp"

namespace hopfint {

/// Hopf quotient: the quotient Hopf algebra, the canonical projection and
/// the kernel ideal (always hopf_ideal_check-verified on construction).
struct HopfQuotientResult {
  FiniteHopfAlgebra quotient;
  Matrix projection; // dim(quotient) x dim(H)
  IdealHandle kernel;
};

/// Linear projection onto the complement of a subspace (non-pivot
/// coordinates of its echelon basis); returns the complement indices too.
std::pair<Matrix, std::vector<std::size_t>> linear_projection(
    const FieldPtr& f, std::size_t n, const Subspace& s);

/// True iff counit(I) = 0, S(I) <= I and Delta(I) <= I(x)H + H(x)I, the last
/// tested as (pi (x) pi)Delta(v) = 0 for the linear quotient map pi.
bool hopf_ideal_check(const FiniteHopfAlgebra& h, const IdealHandle& i);

/// Quotient Hopf algebra by a verified Hopf ideal. Throws NOT_HOPF_IDEAL.
HopfQuotientResult hopf_quotient(const FiniteHopfAlgebra& h, const IdealHandle& i);

/// H / (commutators); the result is commutative.
HopfQuotientResult abelianization(const FiniteHopfAlgebra& h);

/// H_iq = H / intersection of the kernels of the convolution powers of
/// sigma_r. dim equals io(H); the quotient is commutative and its character
/// group is cyclic of order io(H) (all asserted). Throws ORDER_INFINITE when
/// io exceeds the cap.
HopfQuotientResult integral_quotient(const FiniteHopfAlgebra& h,
                                     unsigned long cap = 10000);

/// {h : (id (x) pi)Delta(h) = h (x) pi(1)}; asserted to be a unital
/// subalgebra.
Subspace coinvariants(const FiniteHopfAlgebra& h, const HopfQuotientResult& q);

/// The winding group {sigma_{(sigma_r)^{*i}} : 0 <= i < io}.
std::vector<Matrix> winding_group(const FiniteHopfAlgebra& h,
                                  unsigned long cap = 10000);

} // namespace hopfint

#endif
