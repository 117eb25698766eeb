#include "hopfint/quotients.hpp"

namespace hopfint {

std::pair<Matrix, std::vector<std::size_t>> linear_projection(
    const FieldPtr& f, std::size_t n, const Subspace& s) {
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    std::size_t pc = 0;
    while (pc < n && s.basis.at(r, pc).is_zero()) ++pc;
    if (pc < n) is_pivot[pc] = true;
  }
  std::vector<std::size_t> section;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) section.push_back(i);
  std::size_t q = section.size();
  Matrix proj(f, q, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec v = unit_vec(f, n, i);
    for (std::size_t r = 0; r < s.dim(); ++r) {
      std::size_t pc = 0;
      while (pc < n && s.basis.at(r, pc).is_zero()) ++pc;
      if (pc == n || v[pc].is_zero()) continue;
      Scalar fac = v[pc];
      for (std::size_t c = pc; c < n; ++c)
        if (!s.basis.at(r, c).is_zero())
          v[c] = v[c] - fac * s.basis.at(r, c);
    }
    for (std::size_t t = 0; t < q; ++t) proj.at(t, i) = v[section[t]];
  }
  return {std::move(proj), std::move(section)};
}

bool hopf_ideal_check(const FiniteHopfAlgebra& h, const IdealHandle& ideal) {
  std::size_t n = h.dim();
  const FieldPtr& f = h.field();
  auto [proj, section] = linear_projection(f, n, ideal.space);
  std::size_t q = section.size();
  for (std::size_t r = 0; r < ideal.space.dim(); ++r) {
    Vec v = ideal.space.basis.row(r);
    if (!dot(h.counit, v).is_zero()) return false;
    if (!subspace_member(ideal.space, matvec(h.antipode, v))) return false;
    // (pi (x) pi) Delta(v) accumulated densely in the small quotient square
    Matrix acc(f, q, q);
    Tensor2 dv = delta_of(h, v);
    for (const auto& [key, c] : dv) {
      std::size_t a = key / n, b = key % n;
      for (std::size_t s = 0; s < q; ++s) {
        if (proj.at(s, a).is_zero()) continue;
        for (std::size_t t = 0; t < q; ++t) {
          if (proj.at(t, b).is_zero()) continue;
          acc.at(s, t) = acc.at(s, t) + c * proj.at(s, a) * proj.at(t, b);
        }
      }
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

HopfQuotientResult hopf_quotient(const FiniteHopfAlgebra& h,
                                 const IdealHandle& ideal) {
  if (!hopf_ideal_check(h, ideal))
    throw Error(errc::not_hopf_ideal, "kernel fails the Hopf ideal test");
  QuotientAlgebra qa = quotient_algebra(h.alg, ideal);
  std::size_t n = h.dim(), q = qa.algebra.dim;
  const FieldPtr& f = h.field();

  FiniteHopfAlgebra out;
  out.alg = qa.algebra;
  out.comul.assign(q, {});
  for (std::size_t t = 0; t < q; ++t) {
    Tensor2 dv = delta_of(h, unit_vec(f, n, qa.section[t]));
    // (pi (x) pi)
    Matrix acc(f, q, q);
    for (const auto& [key, c] : dv) {
      std::size_t a = key / n, b = key % n;
      for (std::size_t s = 0; s < q; ++s) {
        if (qa.projection.at(s, a).is_zero()) continue;
        for (std::size_t u = 0; u < q; ++u) {
          if (qa.projection.at(u, b).is_zero()) continue;
          acc.at(s, u) =
              acc.at(s, u) + c * qa.projection.at(s, a) * qa.projection.at(u, b);
        }
      }
    }
    for (std::size_t s = 0; s < q; ++s)
      for (std::size_t u = 0; u < q; ++u)
        if (!acc.at(s, u).is_zero())
          out.comul[t].push_back(CoprodTerm{s, u, acc.at(s, u)});
  }
  out.counit = zero_vec(f, q);
  for (std::size_t t = 0; t < q; ++t)
    out.counit[t] = h.counit[qa.section[t]];
  out.antipode = Matrix(f, q, q);
  for (std::size_t t = 0; t < q; ++t) {
    Vec img = matvec(qa.projection,
                     matvec(h.antipode, unit_vec(f, n, qa.section[t])));
    for (std::size_t s = 0; s < q; ++s) out.antipode.at(s, t) = img[s];
  }

  AxiomReport rep = verify_axioms(out);
  if (!rep.all_passed())
    throw Error(errc::consistency_failure, "quotient fails Hopf axioms");
  if (!verify_hopf_morphism(qa.projection, h, out))
    throw Error(errc::consistency_failure,
                "projection is not a Hopf morphism");
  return HopfQuotientResult{std::move(out), qa.projection, ideal};
}

HopfQuotientResult abelianization(const FiniteHopfAlgebra& h) {
  IdealHandle ideal = commutator_ideal(h.alg);
  HopfQuotientResult res = hopf_quotient(h, ideal);
  if (!is_commutative(res.quotient.alg))
    throw Error(errc::consistency_failure, "abelianization not commutative");
  return res;
}

HopfQuotientResult integral_quotient(const FiniteHopfAlgebra& h,
                                     unsigned long cap) {
  IntegralData data = compute_integrals(h);
  std::optional<unsigned long> io = integral_order(h, data, cap);
  if (!io)
    throw Error(errc::order_infinite, "integral order exceeds the cap");
  std::size_t n = h.dim();
  const FieldPtr& f = h.field();

  // J_iq = intersection of the kernels of (sigma_r)^{*i}, i = 0..io-1
  std::vector<Vec> rows;
  Character power = counit_character(h);
  for (unsigned long i = 0; i < *io; ++i) {
    rows.push_back(power.values);
    power = convolution(h, power, data.sigma_r);
  }
  Matrix cond = Matrix::from_rows(f, rows);
  Subspace jiq = rref_and_nullspace(cond).kernel;
  if (!is_ideal(h.alg, jiq))
    throw Error(errc::consistency_failure,
                "character-kernel intersection is not an ideal");
  HopfQuotientResult res = hopf_quotient(h, IdealHandle{jiq});

  if (res.quotient.dim() != *io)
    throw Error(errc::consistency_failure,
                "dim H_iq != io: " + std::to_string(res.quotient.dim()) +
                    " vs " + std::to_string(*io));
  if (!is_commutative(res.quotient.alg))
    throw Error(errc::consistency_failure, "H_iq not commutative");

  // character group: the convolution powers of sigma_r kill J_iq, so each
  // descends via chi_bar(u_t) = chi(e_{section_t}); they must be io distinct
  // characters and the descended sigma_r must have convolution order io
  std::vector<Character> descended;
  {
    auto [proj, section] = linear_projection(f, n, jiq);
    (void)proj;
    Character pw = counit_character(h);
    for (unsigned long i = 0; i < *io; ++i) {
      Vec vals = zero_vec(f, res.quotient.dim());
      for (std::size_t t = 0; t < section.size(); ++t)
        vals[t] = pw.values[section[t]];
      descended.push_back(Character{std::move(vals)});
      pw = convolution(h, pw, data.sigma_r);
    }
  }
  for (unsigned long i = 0; i < *io; ++i) {
    if (!is_character(res.quotient, descended[i].values))
      throw Error(errc::consistency_failure,
                  "descended character is not a character of H_iq");
    for (unsigned long j = i + 1; j < *io; ++j)
      if (descended[i] == descended[j])
        throw Error(errc::consistency_failure,
                    "descended characters are not distinct");
  }
  if (*io > 1) {
    auto ord = convolution_order(res.quotient, descended[1], cap);
    if (!ord || *ord != *io)
      throw Error(errc::consistency_failure,
                  "H_iq character group is not cyclic of order io");
  }
  return res;
}

Subspace coinvariants(const FiniteHopfAlgebra& h, const HopfQuotientResult& q) {
  std::size_t n = h.dim();
  std::size_t m = q.quotient.dim();
  const FieldPtr& f = h.field();
  Vec pi1 = matvec(q.projection, h.alg.unit);
  // condition matrix: rows indexed by (a, s) in dim x m, columns by i
  Matrix cond(f, n * m, n);
  for (std::size_t i = 0; i < n; ++i) {
    Tensor2 di = delta_of(h, unit_vec(f, n, i));
    // (id (x) pi) Delta(e_i) - e_i (x) pi(1)
    for (const auto& [key, c] : di) {
      std::size_t a = key / n, b = key % n;
      for (std::size_t s = 0; s < m; ++s) {
        if (q.projection.at(s, b).is_zero()) continue;
        cond.at(a * m + s, i) =
            cond.at(a * m + s, i) + c * q.projection.at(s, b);
      }
    }
    for (std::size_t s = 0; s < m; ++s)
      if (!pi1[s].is_zero())
        cond.at(i * m + s, i) = cond.at(i * m + s, i) - pi1[s];
  }
  Subspace co = rref_and_nullspace(cond).kernel;
  if (!subspace_member(co, h.alg.unit))
    throw Error(errc::consistency_failure, "coinvariants lost the unit");
  if (!subspace_multiplicatively_closed(h.alg, co))
    throw Error(errc::consistency_failure, "coinvariants not closed");
  return co;
}

std::vector<Matrix> winding_group(const FiniteHopfAlgebra& h,
                                  unsigned long cap) {
  IntegralData data = compute_integrals(h);
  std::optional<unsigned long> io = integral_order(h, data, cap);
  if (!io)
    throw Error(errc::order_infinite, "integral order exceeds the cap");
  std::vector<Matrix> group;
  Character power = counit_character(h);
  for (unsigned long i = 0; i < *io; ++i) {
    group.push_back(winding_automorphism(h, power));
    power = convolution(h, power, data.sigma_r);
  }
  return group;
}

} // namespace hopfint
