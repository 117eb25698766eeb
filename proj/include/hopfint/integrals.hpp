#ifndef HOPFINT_INTEGRALS_HPP
#define HOPFINT_INTEGRALS_HPP

#include <optional>
#include <variant>

#include "hopfint/hopf.hpp"

namespace hopfint {

/// Left/right integral vectors with the characters carrying their module
/// structures: t_l * h = alpha_l(h) t_l and h * t_r = sigma_r(h) t_r.
struct IntegralData {
  Vec left_integral;   // spans {t : h t = counit(h) t}
  Vec right_integral;  // spans {t : t h = counit(h) t}
  Character alpha_left;
  Character sigma_r;   // the distinguished character
};

/// Both integral spaces computed as joint kernels of (L_h - eps(h)) resp.
/// (R_h - eps(h)); each must be 1-dimensional. Normalization: first nonzero
/// coordinate equals 1.
IntegralData compute_integrals(const FiniteHopfAlgebra& h);

/// Integral order: convolution order of sigma_r, cross-checked against the
/// order of the winding automorphism. The two routes must agree.
std::optional<unsigned long> integral_order(const FiniteHopfAlgebra& h,
                                            unsigned long cap = 10000);
std::optional<unsigned long> integral_order(const FiniteHopfAlgebra& h,
                                            const IntegralData& data,
                                            unsigned long cap);

/// Matrix of h -> sum h_1 pi(h_2); verified to be an algebra automorphism
/// whose inverse is the winding by pi o S.
Matrix winding_automorphism(const FiniteHopfAlgebra& h, const Character& pi);

/// sigma_r == counit, cross-checked against alpha_left == counit.
bool is_unimodular(const FiniteHopfAlgebra& h);
bool is_unimodular(const FiniteHopfAlgebra& h, const IntegralData& data);

struct MaschkeReport {
  Scalar epsilon_of_integral;          // counit of the right integral
  bool semisimple_by_integral = false; // epsilon_of_integral != 0
  std::optional<std::size_t> radical_dim; // nullopt = unsupported char
  bool cond1_holds = false;
};

/// The d=0 Maschke data. cond1 is computed literally as bijectivity of the
/// map Hom_H(int^r, H) -> Hom_H(int^r, k) induced by the counit, with both
/// Hom spaces materialized as solution spaces of intertwining conditions.
MaschkeReport maschke_report(const FiniteHopfAlgebra& h);
MaschkeReport maschke_report(const FiniteHopfAlgebra& h,
                             const IntegralData& data);

/// Over the supplied 1-dimensional simples only: Hom_H(T, k) must vanish for
/// every character T different from the right integral's character.
bool cond2_over_characters(const FiniteHopfAlgebra& h,
                           const std::vector<Character>& simples);

struct AntipodeReport {
  std::optional<unsigned long> order_of_s;
  bool s_squared_is_id = false;
};
AntipodeReport antipode_report(const FiniteHopfAlgebra& h,
                               unsigned long cap = 10000);

/// Character-level consequence of S(int^r) = int^l: alpha_l == sigma_r o S.
bool s_twist_identity_check(const FiniteHopfAlgebra& h);
bool s_twist_identity_check(const FiniteHopfAlgebra& h,
                            const IntegralData& data);

/// Joint right kernel of a family of square matrices (progressively refined;
/// equivalent to the kernel of the stacked matrix).
Subspace joint_kernel(const FieldPtr& f, std::size_t n,
                      const std::vector<Matrix>& blocks);

} // namespace hopfint

#endif
