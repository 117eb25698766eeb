#include "hopfint/integrals.hpp"

namespace hopfint {

Subspace joint_kernel(const FieldPtr& f, std::size_t n,
                      const std::vector<Matrix>& blocks) {
  // running kernel K (rows span it); restrict each block to K and shrink
  Subspace k{n, Matrix::identity(f, n)};
  for (const Matrix& b : blocks) {
    if (k.dim() == 0) break;
    Matrix restricted = matmul(b, k.basis.transpose()); // n x dim(K)
    Subspace c = rref_and_nullspace(restricted).kernel; // coords in K-basis
    if (c.dim() == k.dim()) continue;
    Matrix nb = matmul(c.basis, k.basis);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < nb.rows(); ++r) rows.push_back(nb.row(r));
    k = row_space(f, n, rows);
  }
  return k;
}

namespace {

Vec normalize_first_one(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return scale(s.inverse(), v);
  return v;
}

/// extract the character of a 1-dimensional action: act(i) = image of t
/// under the i-th basis action; t's value is read off at its first nonzero
/// coordinate (t is normalized so that coordinate is 1).
Character action_character(const FiniteHopfAlgebra& h, const Vec& t,
                           bool left_action) {
  std::size_t n = h.dim();
  std::size_t lead = n;
  for (std::size_t i = 0; i < n; ++i)
    if (!t[i].is_zero()) {
      lead = i;
      break;
    }
  if (lead == n)
    throw Error(errc::integral_dim_not_one, "zero integral vector");
  Vec chi = zero_vec(h.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = unit_vec(h.field(), n, i);
    Vec im = left_action ? h.alg.product(ei, t) : h.alg.product(t, ei);
    Scalar c = im[lead]; // t[lead] == 1
    if (im != scale(c, t))
      throw Error(errc::consistency_failure,
                  "integral action is not 1-dimensional");
    chi[i] = c;
  }
  if (!is_character(h, chi))
    throw Error(errc::not_a_character, "integral action character");
  return Character{std::move(chi)};
}

} // namespace

IntegralData compute_integrals(const FiniteHopfAlgebra& h) {
  std::size_t n = h.dim();
  const FieldPtr& f = h.field();
  std::vector<Matrix> lblocks, rblocks;
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = unit_vec(f, n, i);
    Matrix l = left_mult_matrix(h.alg, ei);
    Matrix r = right_mult_matrix(h.alg, ei);
    for (std::size_t d = 0; d < n; ++d) {
      l.at(d, d) = l.at(d, d) - h.counit[i];
      r.at(d, d) = r.at(d, d) - h.counit[i];
    }
    lblocks.push_back(std::move(l));
    rblocks.push_back(std::move(r));
  }
  Subspace li = joint_kernel(f, n, lblocks);
  Subspace ri = joint_kernel(f, n, rblocks);
  if (li.dim() != 1 || ri.dim() != 1)
    throw Error(errc::integral_dim_not_one,
                "left dim " + std::to_string(li.dim()) + ", right dim " +
                    std::to_string(ri.dim()));
  IntegralData out;
  out.left_integral = normalize_first_one(li.basis.row(0));
  out.right_integral = normalize_first_one(ri.basis.row(0));
  out.alpha_left = action_character(h, out.left_integral, /*left=*/false);
  out.sigma_r = action_character(h, out.right_integral, /*left=*/true);
  return out;
}

Matrix winding_automorphism(const FiniteHopfAlgebra& h, const Character& pi) {
  if (!is_character(h, pi.values))
    throw Error(errc::not_a_character, "winding automorphism input");
  std::size_t n = h.dim();
  Matrix m(h.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : h.comul[i])
      m.at(t.j, i) = m.at(t.j, i) + t.c * pi.values[t.k];
  if (!is_algebra_automorphism(h.alg, m))
    throw Error(errc::consistency_failure,
                "winding map is not an algebra automorphism");
  Character pis = character_compose(pi, h.antipode);
  Matrix minv(h.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : h.comul[i])
      minv.at(t.j, i) = minv.at(t.j, i) + t.c * pis.values[t.k];
  if (matmul(m, minv) != Matrix::identity(h.field(), n))
    throw Error(errc::consistency_failure,
                "winding by pi o S is not the inverse");
  return m;
}

std::optional<unsigned long> integral_order(const FiniteHopfAlgebra& h,
                                            unsigned long cap) {
  return integral_order(h, compute_integrals(h), cap);
}

std::optional<unsigned long> integral_order(const FiniteHopfAlgebra& h,
                                            const IntegralData& data,
                                            unsigned long cap) {
  std::optional<unsigned long> by_conv =
      convolution_order(h, data.sigma_r, cap);
  Matrix w = winding_automorphism(h, data.sigma_r);
  std::optional<unsigned long> by_matrix = matrix_order(w, cap);
  if (by_conv != by_matrix)
    throw Error(errc::consistency_failure,
                "convolution order and winding order disagree");
  return by_conv;
}

bool is_unimodular(const FiniteHopfAlgebra& h) {
  return is_unimodular(h, compute_integrals(h));
}

bool is_unimodular(const FiniteHopfAlgebra& h, const IntegralData& data) {
  Character eps = counit_character(h);
  bool via_sigma = data.sigma_r == eps;
  bool via_alpha = data.alpha_left == eps;
  if (via_sigma != via_alpha)
    throw Error(errc::consistency_failure,
                "sigma_r and alpha_l disagree on unimodularity");
  return via_sigma;
}

MaschkeReport maschke_report(const FiniteHopfAlgebra& h) {
  return maschke_report(h, compute_integrals(h));
}

MaschkeReport maschke_report(const FiniteHopfAlgebra& h,
                             const IntegralData& data) {
  std::size_t n = h.dim();
  const FieldPtr& f = h.field();
  MaschkeReport rep{Scalar::zero(f), false, std::nullopt, false};
  rep.epsilon_of_integral = dot(h.counit, data.right_integral);
  rep.semisimple_by_integral = !rep.epsilon_of_integral.is_zero();
  if (radical_supported(h.alg))
    rep.radical_dim = jacobson_radical(h.alg).dim();

  // Hom_H(int^r, H): maps are determined by the image u with
  // h u = sigma_r(h) u for all h.
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix l = left_mult_matrix(h.alg, unit_vec(f, n, i));
    for (std::size_t d = 0; d < n; ++d)
      l.at(d, d) = l.at(d, d) - data.sigma_r.values[i];
    blocks.push_back(std::move(l));
  }
  Subspace hom_to_h = joint_kernel(f, n, blocks);

  // Hom_H(int^r, k): scalars c with c (sigma_r(h) - eps(h)) = 0 for all h;
  // a 0- or 1-dimensional solution space.
  bool hom_to_k_full = data.sigma_r == counit_character(h);
  std::size_t dim_hom_k = hom_to_k_full ? 1 : 0;

  // induced map u -> eps(u) on hom_to_h; bijective iff dims match and the
  // map has full rank
  std::size_t rank_map = 0;
  if (dim_hom_k == 1)
    for (std::size_t r = 0; r < hom_to_h.dim(); ++r)
      if (!dot(h.counit, hom_to_h.basis.row(r)).is_zero()) {
        rank_map = 1;
        break;
      }
  rep.cond1_holds = (hom_to_h.dim() == dim_hom_k) && (rank_map == dim_hom_k);
  return rep;
}

bool cond2_over_characters(const FiniteHopfAlgebra& h,
                           const std::vector<Character>& simples) {
  IntegralData data = compute_integrals(h);
  Character eps = counit_character(h);
  for (const Character& chi : simples) {
    if (chi == data.sigma_r) continue;
    // Hom_H(T_chi, k) != 0 iff chi == eps
    if (chi == eps) return false;
  }
  return true;
}

AntipodeReport antipode_report(const FiniteHopfAlgebra& h, unsigned long cap) {
  AntipodeReport rep;
  rep.order_of_s = matrix_order(h.antipode, cap);
  Matrix s2 = matmul(h.antipode, h.antipode);
  rep.s_squared_is_id = (s2 == Matrix::identity(h.field(), h.dim()));
  return rep;
}

bool s_twist_identity_check(const FiniteHopfAlgebra& h) {
  return s_twist_identity_check(h, compute_integrals(h));
}

bool s_twist_identity_check(const FiniteHopfAlgebra& h,
                            const IntegralData& data) {
  Character rhs = character_compose(data.sigma_r, h.antipode);
  return data.alpha_left == rhs;
}

} // namespace hopfint
