#include "hopfint/hopf.hpp"

#include <algorithm>

namespace hopfint {

Tensor2 delta_of(const FiniteHopfAlgebra& h, const Vec& v) {
  Tensor2 out;
  std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& t : h.comul[i]) {
      std::size_t key = t.j * n + t.k;
      Scalar add = v[i] * t.c;
      auto it = out.find(key);
      if (it == out.end())
        out.emplace(key, add);
      else {
        it->second = it->second + add;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

Tensor2 tensor2_product(const FiniteAlgebra& alg, const Tensor2& x,
                        const Tensor2& y) {
  Tensor2 out;
  std::size_t n = alg.dim;
  for (const auto& [kx, cx] : x) {
    std::size_t a = kx / n, b = kx % n;
    for (const auto& [ky, cy] : y) {
      std::size_t c = ky / n, d = ky % n;
      Scalar coeff = cx * cy;
      for (const auto& [m1, c1] : alg.mul_entry(a, c))
        for (const auto& [m2, c2] : alg.mul_entry(b, d)) {
          std::size_t key = m1 * n + m2;
          Scalar add = coeff * c1 * c2;
          auto it = out.find(key);
          if (it == out.end())
            out.emplace(key, add);
          else {
            it->second = it->second + add;
            if (it->second.is_zero()) out.erase(it);
          }
        }
    }
  }
  return out;
}

namespace {

void tensor2_axpy(Tensor2& acc, const Scalar& c, const Tensor2& t) {
  for (const auto& [k, v] : t) {
    Scalar add = c * v;
    auto it = acc.find(k);
    if (it == acc.end())
      acc.emplace(k, add);
    else {
      it->second = it->second + add;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

Tensor2 tensor2_of_pair(std::size_t n, const Vec& a, const Vec& b) {
  Tensor2 out;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!b[j].is_zero()) out.emplace(i * n + j, a[i] * b[j]);
  }
  return out;
}

} // namespace

AxiomReport verify_axioms(const FiniteHopfAlgebra& h) {
  AxiomReport rep;
  std::size_t n = h.dim();
  auto push = [&rep](const std::string& name, bool ok, const std::string& w) {
    rep.items.push_back({name, ok, ok ? "" : w});
  };

  if (auto bad = check_algebra_axioms(h.alg))
    push("algebra associativity and unit", false, *bad);
  else
    push("algebra associativity and unit", true, "");

  // coassociativity: (Delta (x) id)Delta = (id (x) Delta)Delta on each e_i
  {
    bool ok = true;
    std::string wit;
    for (std::size_t i = 0; i < n && ok; ++i) {
      std::map<std::size_t, Scalar> lhs, rhs; // key a*n^2 + b*n + c
      for (const auto& t : h.comul[i]) {
        for (const auto& u : h.comul[t.j]) {
          std::size_t key = (u.j * n + u.k) * n + t.k;
          Scalar add = t.c * u.c;
          auto it = lhs.find(key);
          if (it == lhs.end()) lhs.emplace(key, add);
          else { it->second = it->second + add; if (it->second.is_zero()) lhs.erase(it); }
        }
        for (const auto& u : h.comul[t.k]) {
          std::size_t key = (t.j * n + u.j) * n + u.k;
          Scalar add = t.c * u.c;
          auto it = rhs.find(key);
          if (it == rhs.end()) rhs.emplace(key, add);
          else { it->second = it->second + add; if (it->second.is_zero()) rhs.erase(it); }
        }
      }
      if (lhs != rhs) {
        ok = false;
        wit = "basis index " + std::to_string(i);
      }
    }
    push("coassociativity", ok, wit);
  }

  // counit law
  {
    bool ok = true;
    std::string wit;
    for (std::size_t i = 0; i < n && ok; ++i) {
      Vec left = zero_vec(h.field(), n), right = zero_vec(h.field(), n);
      for (const auto& t : h.comul[i]) {
        left[t.k] = left[t.k] + h.counit[t.j] * t.c;
        right[t.j] = right[t.j] + h.counit[t.k] * t.c;
      }
      Vec ei = unit_vec(h.field(), n, i);
      if (left != ei || right != ei) {
        ok = false;
        wit = "basis index " + std::to_string(i);
      }
    }
    push("counit law", ok, wit);
  }

  // Delta multiplicative (and Delta(1) = 1 (x) 1)
  {
    bool ok = true;
    std::string wit;
    Tensor2 du = delta_of(h, h.alg.unit);
    if (du != tensor2_of_pair(n, h.alg.unit, h.alg.unit)) {
      ok = false;
      wit = "Delta(1) != 1(x)1";
    }
    for (std::size_t i = 0; i < n && ok; ++i) {
      Tensor2 di;
      for (const auto& t : h.comul[i]) di.emplace(t.j * n + t.k, t.c);
      for (std::size_t j = 0; j < n && ok; ++j) {
        Tensor2 dj;
        for (const auto& t : h.comul[j]) dj.emplace(t.j * n + t.k, t.c);
        Tensor2 lhs;
        for (const auto& [k, c] : h.alg.mul_entry(i, j)) {
          Tensor2 dk;
          for (const auto& t : h.comul[k]) dk.emplace(t.j * n + t.k, t.c);
          tensor2_axpy(lhs, c, dk);
        }
        if (lhs != tensor2_product(h.alg, di, dj)) {
          ok = false;
          wit = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    }
    push("coproduct is an algebra map", ok, wit);
  }

  // counit multiplicative
  {
    bool ok = true;
    std::string wit;
    if (dot(h.counit, h.alg.unit) != Scalar::one(h.field())) {
      ok = false;
      wit = "counit(1) != 1";
    }
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        Scalar lhs = Scalar::zero(h.field());
        for (const auto& [k, c] : h.alg.mul_entry(i, j))
          lhs = lhs + c * h.counit[k];
        if (lhs != h.counit[i] * h.counit[j]) {
          ok = false;
          wit = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    push("counit is an algebra map", ok, wit);
  }

  // antipode axiom
  {
    bool ok = true;
    std::string wit;
    for (std::size_t i = 0; i < n && ok; ++i) {
      Vec left = zero_vec(h.field(), n), right = zero_vec(h.field(), n);
      for (const auto& t : h.comul[i]) {
        // m(S (x) id): S(e_j) * e_k, and m(id (x) S): e_j * S(e_k)
        Vec sej = zero_vec(h.field(), n);
        for (std::size_t r = 0; r < n; ++r) sej[r] = h.antipode.at(r, t.j);
        Vec sek = zero_vec(h.field(), n);
        for (std::size_t r = 0; r < n; ++r) sek[r] = h.antipode.at(r, t.k);
        left = add(left, scale(t.c, h.alg.product(sej, unit_vec(h.field(), n, t.k))));
        right = add(right, scale(t.c, h.alg.product(unit_vec(h.field(), n, t.j), sek)));
      }
      Vec expect = scale(h.counit[i], h.alg.unit);
      if (left != expect || right != expect) {
        ok = false;
        wit = "basis index " + std::to_string(i);
      }
    }
    push("antipode axiom", ok, wit);
  }

  // antipode anti-homomorphism
  {
    bool ok = true;
    std::string wit;
    if (matvec(h.antipode, h.alg.unit) != h.alg.unit) {
      ok = false;
      wit = "S(1) != 1";
    }
    for (std::size_t i = 0; i < n && ok; ++i) {
      Vec si = matvec(h.antipode, unit_vec(h.field(), n, i));
      for (std::size_t j = 0; j < n && ok; ++j) {
        Vec sj = matvec(h.antipode, unit_vec(h.field(), n, j));
        Vec lhs = matvec(h.antipode, h.alg.product(unit_vec(h.field(), n, i),
                                                   unit_vec(h.field(), n, j)));
        if (lhs != h.alg.product(sj, si)) {
          ok = false;
          wit = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    }
    push("antipode anti-homomorphism", ok, wit);
  }

  return rep;
}

FiniteHopfAlgebra tensor_hopf(const FiniteHopfAlgebra& h,
                              const FiniteHopfAlgebra& k) {
  if (!(*h.field() == *k.field()))
    throw Error(errc::field_mismatch, "tensor_hopf");
  const FieldPtr& f = h.field();
  std::size_t nh = h.dim(), nk = k.dim(), n = nh * nk;
  FiniteHopfAlgebra out;
  out.alg.field = f;
  out.alg.dim = n;
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = 0; j < nk; ++j)
      out.alg.basis_labels.push_back(h.alg.label(i) + "(x)" + k.alg.label(j));
  out.alg.unit = zero_vec(f, n);
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = 0; j < nk; ++j)
      out.alg.unit[i * nk + j] = h.alg.unit[i] * k.alg.unit[j];
  out.alg.mul.assign(n * n, SparseVec{});
  for (std::size_t i1 = 0; i1 < nh; ++i1)
    for (std::size_t j1 = 0; j1 < nk; ++j1)
      for (std::size_t i2 = 0; i2 < nh; ++i2)
        for (std::size_t j2 = 0; j2 < nk; ++j2) {
          std::vector<std::pair<std::size_t, Scalar>> acc;
          for (const auto& [a, ca] : h.alg.mul_entry(i1, i2))
            for (const auto& [b, cb] : k.alg.mul_entry(j1, j2))
              acc.emplace_back(a * nk + b, ca * cb);
          out.alg.mul[(i1 * nk + j1) * n + (i2 * nk + j2)] =
              canonical_sparse(std::move(acc));
        }
  out.comul.assign(n, {});
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = 0; j < nk; ++j) {
      auto& terms = out.comul[i * nk + j];
      for (const auto& th : h.comul[i])
        for (const auto& tk : k.comul[j])
          terms.push_back(CoprodTerm{th.j * nk + tk.j, th.k * nk + tk.k,
                                     th.c * tk.c});
    }
  out.counit = zero_vec(f, n);
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t j = 0; j < nk; ++j)
      out.counit[i * nk + j] = h.counit[i] * k.counit[j];
  out.antipode = kronecker(h.antipode, k.antipode);
  return out;
}

FiniteHopfAlgebra dual_hopf(const FiniteHopfAlgebra& h) {
  const FieldPtr& f = h.field();
  std::size_t n = h.dim();
  FiniteHopfAlgebra out;
  out.alg.field = f;
  out.alg.dim = n;
  for (std::size_t i = 0; i < n; ++i)
    out.alg.basis_labels.push_back(h.alg.label(i) + "^");
  out.alg.unit = h.counit;
  out.alg.mul.assign(n * n, SparseVec{});
  {
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> acc(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& t : h.comul[i]) acc[t.j * n + t.k].emplace_back(i, t.c);
    for (std::size_t e = 0; e < n * n; ++e)
      out.alg.mul[e] = canonical_sparse(std::move(acc[e]));
  }
  out.comul.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : h.alg.mul_entry(i, j))
        out.comul[k].push_back(CoprodTerm{i, j, c});
  out.counit = h.alg.unit;
  out.antipode = h.antipode.transpose();

  AxiomReport rep = verify_axioms(out);
  if (!rep.all_passed())
    throw Error(errc::consistency_failure, "dual fails Hopf axioms");
  return out;
}

FiniteHopfAlgebra base_change(const FiniteHopfAlgebra& h, const FieldPtr& target) {
  if (!coercible(h.field(), target))
    throw Error(errc::incompatible_extension,
                h.field()->to_string() + " -> " + target->to_string());
  FiniteHopfAlgebra out;
  std::size_t n = h.dim();
  out.alg.field = target;
  out.alg.dim = n;
  out.alg.basis_labels = h.alg.basis_labels;
  out.alg.unit.reserve(n);
  for (const auto& s : h.alg.unit) out.alg.unit.push_back(coerce(s, target));
  out.alg.mul.assign(n * n, SparseVec{});
  for (std::size_t e = 0; e < n * n; ++e)
    for (const auto& [k, c] : h.alg.mul[e])
      out.alg.mul[e].emplace_back(k, coerce(c, target));
  out.comul.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : h.comul[i])
      out.comul[i].push_back(CoprodTerm{t.j, t.k, coerce(t.c, target)});
  out.counit.reserve(n);
  for (const auto& s : h.counit) out.counit.push_back(coerce(s, target));
  out.antipode = Matrix(target, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      out.antipode.at(r, c) = coerce(h.antipode.at(r, c), target);
  return out;
}

bool is_character(const FiniteHopfAlgebra& h, const Vec& phi) {
  std::size_t n = h.dim();
  if (phi.size() != n) return false;
  if (dot(phi, h.alg.unit) != Scalar::one(h.field())) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar lhs = Scalar::zero(h.field());
      for (const auto& [k, c] : h.alg.mul_entry(i, j)) lhs = lhs + c * phi[k];
      if (lhs != phi[i] * phi[j]) return false;
    }
  return true;
}

Character counit_character(const FiniteHopfAlgebra& h) {
  return Character{h.counit};
}

Character convolution(const FiniteHopfAlgebra& h, const Character& a,
                      const Character& b) {
  std::size_t n = h.dim();
  Vec out = zero_vec(h.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : h.comul[i])
      out[i] = out[i] + t.c * a.values[t.j] * b.values[t.k];
  if (!is_character(h, out))
    throw Error(errc::not_a_character, "convolution of corrupted characters");
  return Character{std::move(out)};
}

std::optional<unsigned long> convolution_order(const FiniteHopfAlgebra& h,
                                               const Character& phi,
                                               unsigned long cap) {
  Character eps = counit_character(h);
  Character p = phi;
  for (unsigned long t = 1; t <= cap; ++t) {
    if (p == eps) return t;
    p = convolution(h, p, phi);
  }
  return std::nullopt;
}

Character character_compose(const Character& phi, const Matrix& m) {
  return Character{vecmat(phi.values, m)};
}

bool verify_hopf_morphism(const Matrix& f, const FiniteHopfAlgebra& h,
                          const FiniteHopfAlgebra& k) {
  std::size_t nh = h.dim(), nk = k.dim();
  if (f.rows() != nk || f.cols() != nh) return false;
  if (matvec(f, h.alg.unit) != k.alg.unit) return false;
  // multiplicative
  for (std::size_t i = 0; i < nh; ++i) {
    Vec fi = matvec(f, unit_vec(h.field(), nh, i));
    for (std::size_t j = 0; j < nh; ++j) {
      Vec fj = matvec(f, unit_vec(h.field(), nh, j));
      Vec lhs = matvec(f, h.alg.product(unit_vec(h.field(), nh, i),
                                        unit_vec(h.field(), nh, j)));
      if (lhs != k.alg.product(fi, fj)) return false;
    }
  }
  // comultiplicative: (f (x) f) Delta_H(e_i) = Delta_K(f(e_i))
  for (std::size_t i = 0; i < nh; ++i) {
    Tensor2 lhs;
    for (const auto& t : h.comul[i]) {
      Vec fj = matvec(f, unit_vec(h.field(), nh, t.j));
      Vec fk = matvec(f, unit_vec(h.field(), nh, t.k));
      tensor2_axpy(lhs, t.c, tensor2_of_pair(nk, fj, fk));
    }
    Tensor2 rhs = delta_of(k, matvec(f, unit_vec(h.field(), nh, i)));
    if (lhs != rhs) return false;
  }
  // counital
  for (std::size_t i = 0; i < nh; ++i) {
    Vec fi = matvec(f, unit_vec(h.field(), nh, i));
    if (dot(k.counit, fi) != h.counit[i]) return false;
  }
  // antipodes
  if (matmul(f, h.antipode) != matmul(k.antipode, f)) return false;
  return true;
}

} // namespace hopfint
