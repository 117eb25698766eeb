#include "hopfint/family.hpp"

#include <algorithm>

#include "hopfint/integrals.hpp"

namespace hopfint {

namespace {

void lincomb_axpy(LinComb& acc, const Scalar& c, const LinComb& t) {
  for (const auto& [m, v] : t) {
    Scalar add = c * v;
    auto it = acc.find(m);
    if (it == acc.end()) {
      if (!add.is_zero()) acc.emplace(m, add);
    } else {
      it->second = it->second + add;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

void tensor_axpy(TensorComb& acc, const Scalar& c, const Monomial& l,
                 const Monomial& r) {
  auto key = std::make_pair(l, r);
  auto it = acc.find(key);
  if (it == acc.end()) {
    if (!c.is_zero()) acc.emplace(std::move(key), c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

} // namespace

LinComb nf_expr(const PresentedHopfFamily& f, const WordExpr& e) {
  LinComb acc;
  for (const auto& t : e) lincomb_axpy(acc, t.coeff, f.normal_form(t.word));
  return acc;
}

bool nf_is_zero(const PresentedHopfFamily& f, const WordExpr& e) {
  return nf_expr(f, e).empty();
}

TensorComb delta_word(const PresentedHopfFamily& f, const Word& w) {
  // progressive product of the generators' formal coproducts, normalizing
  // both legs at every step to keep the support small
  TensorComb acc;
  LinComb start = f.normal_form(Word{}); // the unit monomial
  Monomial unit_mon = start.begin()->first;
  acc.emplace(std::make_pair(unit_mon, unit_mon), start.begin()->second);
  for (std::size_t sym : w) {
    TensorComb next;
    for (const auto& [lr, c] : acc) {
      Word wl = f.monomial_word(lr.first);
      Word wr = f.monomial_word(lr.second);
      for (const auto& dt : f.hopf[sym].delta) {
        LinComb nl = f.normal_form(concat(wl, dt.left));
        LinComb nr = f.normal_form(concat(wr, dt.right));
        Scalar base = c * dt.coeff;
        for (const auto& [ml, cl] : nl)
          for (const auto& [mr, cr] : nr)
            tensor_axpy(next, base * cl * cr, ml, mr);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

TensorComb delta_expr(const PresentedHopfFamily& f, const WordExpr& e) {
  TensorComb acc;
  for (const auto& t : e) {
    TensorComb dw = delta_word(f, t.word);
    for (const auto& [lr, c] : dw) tensor_axpy(acc, t.coeff * c, lr.first, lr.second);
  }
  return acc;
}

WordExpr subst(const WordExpr& e, const std::vector<WordExpr>& images) {
  WordExpr out;
  for (const auto& t : e) {
    // expand the product of images letter by letter
    WordExpr cur = {WTerm{t.coeff, Word{}}};
    for (std::size_t sym : t.word) {
      WordExpr next;
      for (const auto& a : cur)
        for (const auto& b : images[sym])
          next.push_back(WTerm{a.coeff * b.coeff, concat(a.word, b.word)});
      cur = std::move(next);
    }
    out.insert(out.end(), cur.begin(), cur.end());
  }
  return out;
}

WordExpr antipode_expr(const PresentedHopfFamily& f, const WordExpr& e) {
  WordExpr out;
  for (const auto& t : e) {
    WordExpr cur = {WTerm{t.coeff, Word{}}};
    for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
      WordExpr next;
      for (const auto& a : cur)
        for (const auto& b : f.hopf[*it].antipode)
          next.push_back(WTerm{a.coeff * b.coeff, concat(a.word, b.word)});
      cur = std::move(next);
    }
    out.insert(out.end(), cur.begin(), cur.end());
  }
  return out;
}

Scalar eval_character(const PresentedHopfFamily& f, const FamilyCharacter& chi,
                      const WordExpr& e) {
  Scalar acc = Scalar::zero(f.field);
  for (const auto& t : e) {
    Scalar v = t.coeff;
    for (std::size_t sym : t.word) v = v * chi.values[sym];
    acc = acc + v;
  }
  return acc;
}

bool character_satisfies_relators(const PresentedHopfFamily& f,
                                  const FamilyCharacter& chi) {
  for (const auto& rel : f.relators)
    if (!eval_character(f, chi, rel).is_zero()) return false;
  return true;
}

namespace {

Vec eval_in_terminal(const PresentedHopfFamily& f, const WordExpr& e) {
  const FiniteHopfAlgebra& t = *f.terminal;
  Vec acc = zero_vec(f.field, t.dim());
  for (const auto& term : e) {
    Vec v = t.alg.unit;
    for (std::size_t sym : term.word)
      v = t.alg.product(v, f.terminal_projection[sym]);
    acc = add(acc, scale(term.coeff, v));
  }
  return acc;
}

WordExpr gen_expr(const FieldPtr& fld, std::size_t g) {
  return {WTerm{Scalar::one(fld), Word{g}}};
}

void verify_stage(const PresentedHopfFamily& f, std::size_t stage_idx,
                  ChainReport& rep) {
  auto fail = [&](const std::string& msg) {
    rep.failures.push_back("stage " + std::to_string(stage_idx) + ": " + msg);
  };
  for (std::size_t r = 0; r < f.relators.size(); ++r)
    if (!nf_is_zero(f, f.relators[r]))
      fail("relator " + std::to_string(r) + " does not normalize to 0");

  if (f.step) {
    const ReductionStep& st = *f.step;
    const PresentedHopfFamily& g = *f.next;
    const WordExpr& w = st.normal_element;
    for (std::size_t i = 0; i < f.arity(); ++i) {
      // normality w g_i = tau(g_i) w
      WordExpr lhs;
      for (const auto& t : w) {
        Word ww = t.word;
        ww.push_back(i);
        lhs.push_back(WTerm{t.coeff, std::move(ww)});
      }
      for (const auto& a : st.twist[i])
        for (const auto& b : w)
          lhs.push_back(WTerm{-(a.coeff * b.coeff), concat(a.word, b.word)});
      if (!nf_is_zero(f, lhs))
        fail("normality fails on generator " + f.gen_names[i]);
      // twist inverses
      WordExpr ti = subst(st.twist_inverse[i], st.twist);
      ti.push_back(WTerm{-Scalar::one(f.field), Word{i}});
      if (!nf_is_zero(f, ti))
        fail("tau(tau^{-1}) != id on generator " + f.gen_names[i]);
      WordExpr it = subst(st.twist[i], st.twist_inverse);
      it.push_back(WTerm{-Scalar::one(f.field), Word{i}});
      if (!nf_is_zero(f, it))
        fail("tau^{-1}(tau) != id on generator " + f.gen_names[i]);
    }
    // tau respects relators
    for (std::size_t r = 0; r < f.relators.size(); ++r)
      if (!nf_is_zero(f, subst(f.relators[r], st.twist)))
        fail("tau breaks relator " + std::to_string(r));
    // witness expands to Delta(w)
    {
      TensorComb expanded;
      for (const auto& wt : st.hopf_ideal_witness) {
        WordExpr side; // pre * w * post
        for (const auto& t : w)
          side.push_back(
              WTerm{wt.coeff * t.coeff, concat(wt.pre, concat(t.word, wt.post))});
        for (const auto& s : side) {
          LinComb sn = f.normal_form(s.word);
          LinComb on = f.normal_form(wt.other);
          for (const auto& [ms, cs] : sn)
            for (const auto& [mo, co] : on) {
              if (wt.w_on_left)
                tensor_axpy(expanded, s.coeff * cs * co, ms, mo);
              else
                tensor_axpy(expanded, s.coeff * cs * co, mo, ms);
            }
        }
      }
      if (expanded != delta_expr(f, w))
        fail("Hopf-ideal witness does not expand to Delta(w)");
    }
    // projection: kills w, respects relators and Hopf data
    if (!nf_is_zero(g, subst(w, st.projection)))
      fail("projection does not kill the normal element");
    for (std::size_t r = 0; r < f.relators.size(); ++r)
      if (!nf_is_zero(g, subst(f.relators[r], st.projection)))
        fail("projection breaks relator " + std::to_string(r));
    for (std::size_t i = 0; i < f.arity(); ++i) {
      const WordExpr gi = gen_expr(f.field, i);
      // counit
      FamilyCharacter eps_g = family_counit(g);
      Scalar lhs = eval_character(g, eps_g, subst(gi, st.projection));
      if (lhs != f.hopf[i].counit)
        fail("projection breaks the counit on " + f.gen_names[i]);
      // antipode
      WordExpr a1 = subst(antipode_expr(f, gi), st.projection);
      WordExpr a2 = antipode_expr(g, subst(gi, st.projection));
      for (auto& t : a2) t.coeff = -t.coeff;
      a1.insert(a1.end(), a2.begin(), a2.end());
      if (!nf_is_zero(g, a1))
        fail("projection breaks the antipode on " + f.gen_names[i]);
      // coproduct: (proj (x) proj) Delta_F(g) = Delta_G(proj(g))
      TensorComb lhs_t;
      for (const auto& dt : f.hopf[i].delta) {
        WordExpr pl = subst(WordExpr{WTerm{dt.coeff, dt.left}}, st.projection);
        WordExpr pr = subst(WordExpr{WTerm{Scalar::one(f.field), dt.right}},
                            st.projection);
        LinComb nl = nf_expr(g, pl);
        LinComb nr = nf_expr(g, pr);
        for (const auto& [ml, cl] : nl)
          for (const auto& [mr, cr] : nr) tensor_axpy(lhs_t, cl * cr, ml, mr);
      }
      if (lhs_t != delta_expr(g, subst(gi, st.projection)))
        fail("projection breaks the coproduct on " + f.gen_names[i]);
    }
    verify_stage(g, stage_idx + 1, rep);
    return;
  }

  // terminal stage
  if (!f.terminal) {
    fail("chain ends without terminal data");
    return;
  }
  AxiomReport ax = verify_axioms(*f.terminal);
  for (const auto& item : ax.items)
    if (!item.passed) fail("terminal axiom '" + item.name + "' fails");
  for (std::size_t r = 0; r < f.relators.size(); ++r)
    if (!is_zero_vec(eval_in_terminal(f, f.relators[r])))
      fail("terminal projection breaks relator " + std::to_string(r));
  const FiniteHopfAlgebra& t = *f.terminal;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    const Vec& pg = f.terminal_projection[i];
    if (dot(t.counit, pg) != f.hopf[i].counit)
      fail("terminal counit mismatch on " + f.gen_names[i]);
    Vec s_lhs = matvec(t.antipode, pg);
    Vec s_rhs = eval_in_terminal(f, f.hopf[i].antipode);
    if (s_lhs != s_rhs) fail("terminal antipode mismatch on " + f.gen_names[i]);
    Tensor2 d_lhs = delta_of(t, pg);
    Tensor2 d_rhs;
    std::size_t n = t.dim();
    for (const auto& dt : f.hopf[i].delta) {
      Vec vl = eval_in_terminal(f, WordExpr{WTerm{dt.coeff, dt.left}});
      Vec vr = eval_in_terminal(f, WordExpr{WTerm{Scalar::one(f.field), dt.right}});
      for (std::size_t a = 0; a < n; ++a) {
        if (vl[a].is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (vr[b].is_zero()) continue;
          std::size_t key = a * n + b;
          Scalar add = vl[a] * vr[b];
          auto itr = d_rhs.find(key);
          if (itr == d_rhs.end())
            d_rhs.emplace(key, add);
          else {
            itr->second = itr->second + add;
            if (itr->second.is_zero()) d_rhs.erase(itr);
          }
        }
      }
    }
    if (d_lhs != d_rhs) fail("terminal coproduct mismatch on " + f.gen_names[i]);
  }
}

} // namespace

ChainReport verify_chain(const PresentedHopfFamily& f) {
  ChainReport rep;
  verify_stage(f, 0, rep);
  return rep;
}

FamilyCharacter integral_character(const PresentedHopfFamily& f) {
  if (f.terminal) {
    IntegralData data = compute_integrals(*f.terminal);
    FamilyCharacter chi;
    for (std::size_t i = 0; i < f.arity(); ++i)
      chi.values.push_back(
          dot(data.alpha_left.values, f.terminal_projection[i]));
    if (!character_satisfies_relators(f, chi))
      throw Error(errc::relator_violation, "terminal integral character");
    return chi;
  }
  FamilyCharacter next_chi = integral_character(*f.next);
  const ReductionStep& st = *f.step;
  FamilyCharacter chi;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    WordExpr lifted = subst(st.twist_inverse[i], st.projection);
    chi.values.push_back(eval_character(*f.next, next_chi, lifted));
  }
  if (!character_satisfies_relators(f, chi))
    throw Error(errc::relator_violation,
                "pulled-back integral character at stage " + f.name);
  return chi;
}

FamilyCharacter sigma_r_character(const PresentedHopfFamily& f,
                                  const FamilyCharacter& alpha_left) {
  FamilyCharacter out;
  for (std::size_t i = 0; i < f.arity(); ++i)
    out.values.push_back(
        eval_character(f, alpha_left, f.hopf[i].antipode));
  if (!character_satisfies_relators(f, out))
    throw Error(errc::relator_violation, "sigma_r character");
  return out;
}

FamilyCharacter family_counit(const PresentedHopfFamily& f) {
  FamilyCharacter eps;
  for (std::size_t i = 0; i < f.arity(); ++i)
    eps.values.push_back(f.hopf[i].counit);
  return eps;
}

FamilyCharacter family_convolution(const PresentedHopfFamily& f,
                                   const FamilyCharacter& a,
                                   const FamilyCharacter& b) {
  FamilyCharacter out;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    Scalar v = Scalar::zero(f.field);
    for (const auto& dt : f.hopf[i].delta) {
      Scalar term = dt.coeff;
      for (std::size_t s : dt.left) term = term * a.values[s];
      for (std::size_t s : dt.right) term = term * b.values[s];
      v = v + term;
    }
    out.values.push_back(v);
  }
  if (!character_satisfies_relators(f, out))
    throw Error(errc::relator_violation, "convolution left the character set");
  return out;
}

std::optional<unsigned long> family_integral_order(const PresentedHopfFamily& f,
                                                   unsigned long cap) {
  FamilyCharacter alpha = integral_character(f);
  FamilyCharacter sigma = sigma_r_character(f, alpha);
  FamilyCharacter eps = family_counit(f);
  std::optional<unsigned long> ord_sigma, ord_alpha;
  FamilyCharacter p = sigma;
  for (unsigned long t = 1; t <= cap; ++t) {
    if (p == eps) {
      ord_sigma = t;
      break;
    }
    p = family_convolution(f, p, sigma);
  }
  p = alpha;
  for (unsigned long t = 1; t <= cap; ++t) {
    if (p == eps) {
      ord_alpha = t;
      break;
    }
    p = family_convolution(f, p, alpha);
  }
  if (ord_sigma != ord_alpha)
    throw Error(errc::consistency_failure,
                "orders of alpha_l and sigma_r disagree");
  return ord_sigma;
}

std::vector<FamilyCharacter> clique_of_trivial(const PresentedHopfFamily& f,
                                               unsigned long cap) {
  std::optional<unsigned long> io = family_integral_order(f, cap);
  if (!io)
    throw Error(errc::order_infinite, "clique needs finite integral order");
  FamilyCharacter sigma = sigma_r_character(f, integral_character(f));
  std::vector<FamilyCharacter> orbit;
  FamilyCharacter p = family_counit(f);
  for (unsigned long t = 0; t < *io; ++t) {
    orbit.push_back(p);
    p = family_convolution(f, p, sigma);
  }
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (std::size_t j = i + 1; j < orbit.size(); ++j)
      if (orbit[i] == orbit[j])
        throw Error(errc::consistency_failure, "clique characters collide");
  return orbit;
}

namespace {

Scalar eval_character_on_monomial(const PresentedHopfFamily& f,
                                  const FamilyCharacter& chi,
                                  const Monomial& m) {
  Scalar v = Scalar::one(f.field);
  for (std::size_t s : f.monomial_word(m)) v = v * chi.values[s];
  return v;
}

} // namespace

TruncationResult truncate(const PresentedHopfFamily& f, unsigned long s,
                          unsigned long cap) {
  if (!f.truncation)
    throw Error(errc::truncation_undeclared,
                "family '" + f.name + "' declares no truncation basis");
  const TruncationSpec& tr = *f.truncation;
  std::vector<Monomial> basis = tr.basis(s);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::size_t n = basis.size();

  FiniteAlgebra alg;
  alg.field = f.field;
  alg.dim = n;
  for (const auto& m : basis) alg.basis_labels.push_back(f.monomial_name(m));
  LinComb unit_nf = f.normal_form(Word{});
  alg.unit = zero_vec(f.field, n);
  for (const auto& [m, c] : unit_nf) {
    auto it = index.find(m);
    if (it == index.end())
      throw Error(errc::consistency_failure, "unit outside truncation basis");
    alg.unit[it->second] = c;
  }
  alg.mul.assign(n * n, SparseVec{});
  for (std::size_t i = 0; i < n; ++i) {
    Word wi = f.monomial_word(basis[i]);
    for (std::size_t j = 0; j < n; ++j) {
      LinComb prod = f.normal_form(concat(wi, f.monomial_word(basis[j])));
      std::vector<std::pair<std::size_t, Scalar>> acc;
      for (const auto& [m, c] : prod) {
        if (!tr.in_basis(m, s)) continue; // killed by J^s
        acc.emplace_back(index.at(m), c);
      }
      alg.mul[i * n + j] = canonical_sparse(std::move(acc));
    }
  }
  if (auto bad = check_algebra_axioms(alg))
    throw Error(errc::consistency_failure, "truncation not associative: " + *bad);

  // winding group descends to the truncation
  std::optional<unsigned long> io = family_integral_order(f, cap);
  if (!io) throw Error(errc::order_infinite, "winding group needs finite io");
  std::vector<FamilyCharacter> powers = clique_of_trivial(f, cap);

  std::vector<Matrix> windings;
  for (const FamilyCharacter& chi : powers) {
    Matrix w(f.field, n, n);
    for (std::size_t u = 0; u < n; ++u) {
      TensorComb du = delta_word(f, f.monomial_word(basis[u]));
      for (const auto& [lr, c] : du) {
        Scalar val = c * eval_character_on_monomial(f, chi, lr.second);
        if (val.is_zero()) continue;
        auto it = index.find(lr.first);
        if (it == index.end())
          throw Error(errc::consistency_failure,
                      "winding image leaves the truncation basis");
        w.at(it->second, u) = w.at(it->second, u) + val;
      }
    }
    if (!is_algebra_automorphism(alg, w))
      throw Error(errc::consistency_failure,
                  "descended winding is not an automorphism");
    windings.push_back(std::move(w));
  }
  // kernel preservation, checked on the first layer outside the basis
  {
    std::vector<Monomial> outer = tr.basis(s + 1);
    for (const auto& m : outer) {
      if (tr.in_basis(m, s)) continue;
      TensorComb dm = delta_word(f, f.monomial_word(m));
      for (const FamilyCharacter& chi : powers)
        for (const auto& [lr, c] : dm) {
          Scalar val = c * eval_character_on_monomial(f, chi, lr.second);
          if (!val.is_zero() && tr.in_basis(lr.first, s))
            throw Error(errc::consistency_failure,
                        "winding does not preserve the truncation kernel");
        }
    }
  }
  // group structure: w_t = w_1^t and w_1^{io} = id
  if (*io > 1) {
    Matrix p = windings[1];
    for (unsigned long t = 2; t < *io; ++t) {
      p = matmul(p, windings[1]);
      if (p != windings[t])
        throw Error(errc::consistency_failure, "winding powers disagree");
    }
    if (matmul(p, windings[1]) != Matrix::identity(f.field, n))
      throw Error(errc::consistency_failure, "winding order mismatch");
  }
  return TruncationResult{std::move(alg), std::move(windings), std::move(basis)};
}

} // namespace hopfint
