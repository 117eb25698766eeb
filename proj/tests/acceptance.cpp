// Acceptance suite: one check per criterion, exact values, one line each.

#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "hopfint/quotients.hpp"
#include "hopfint/report.hpp"

using namespace hopfint;

namespace {

FieldPtr Q() { return FieldSpec::rationals(); }

int failures = 0;

void criterion(const std::string& name, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  std::printf("[%s] %s%s\n", ok ? "PASS" : "FAIL", name.c_str(), note.c_str());
  if (!ok) ++failures;
}

bool expect(bool cond, const char* what) {
  if (!cond) std::printf("       mismatch: %s\n", what);
  return cond;
}

Scalar chi_value(const PresentedHopfFamily& f, const FamilyCharacter& chi,
                 const std::string& gen) {
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (f.gen_names[i] == gen) return chi.values[i];
  throw Error(errc::invalid_params, "no generator " + gen);
}

} // namespace

int main() {
  criterion("1. Sweedler algebra invariants over Q", [] {
    FiniteHopfAlgebra h = sweedler_algebra(Q());
    bool ok = expect(*integral_order(h, 10000) == 2, "io = 2");
    ok &= expect(!is_unimodular(h), "unimodular = false");
    MaschkeReport m = maschke_report(h);
    ok &= expect(m.epsilon_of_integral.is_zero(), "eps(integral) = 0");
    ok &= expect(m.radical_dim && *m.radical_dim == 2, "radical_dim = 2");
    ok &= expect(m.semisimple_by_integral == (*m.radical_dim == 0),
                 "semisimple iff radical = 0");
    ok &= expect(m.semisimple_by_integral == m.cond1_holds,
                 "semisimple iff cond1");
    ok &= expect(integral_quotient(h).quotient.dim() == 2, "dim H_iq = 2");
    ok &= expect(*antipode_report(h).order_of_s == 4, "antipode order 4");
    return ok;
  });

  criterion("2. Taft family integral character, io and clique (n = 2, 3, 5)", [] {
    bool ok = true;
    for (unsigned long n : {2ul, 3ul, 5ul}) {
      FieldPtr f = n == 2 ? Q() : FieldSpec::cyclotomic(Q(), n);
      auto fam = taft_family(f, n, 1, 1);
      ok &= expect(verify_chain(*fam).ok(), "chain verifies");
      FamilyCharacter alpha = integral_character(*fam);
      Scalar xi = primitive_root_of_unity(f, n);
      ok &= expect(chi_value(*fam, alpha, "g") == xi.inverse(),
                   "character sends g to the inverse root");
      ok &= expect(chi_value(*fam, alpha, "x").is_zero(),
                   "character kills x");
      ok &= expect(*family_integral_order(*fam, 10000) == n, "io = n");
      ok &= expect(clique_of_trivial(*fam, 10000).size() == n,
                   "clique size = n");
    }
    return ok;
  });

  criterion("3. Enveloping algebra of the solvable Lie algebra", [] {
    auto fam = solvable_enveloping(Q());
    bool ok = expect(verify_chain(*fam).ok(), "chain verifies");
    FamilyCharacter alpha = integral_character(*fam);
    ok &= expect(chi_value(*fam, alpha, "x").is_zero(), "x -> 0");
    ok &= expect(chi_value(*fam, alpha, "y") == -Scalar::one(Q()), "y -> -1");
    ok &= expect(!family_integral_order(*fam, 10000).has_value(),
                 "io = none over Q");
    for (unsigned long p : {3ul, 5ul}) {
      auto famp = solvable_enveloping(FieldSpec::prime(p));
      ok &= expect(*family_integral_order(*famp, 10000) == p,
                   "io = p over F_p");
    }
    return ok;
  });

  criterion("4. Infinite dihedral group algebra", [] {
    auto fam = infinite_dihedral_family(Q());
    bool ok = expect(verify_chain(*fam).ok(), "chain verifies");
    FamilyCharacter sigma = sigma_r_character(*fam, integral_character(*fam));
    ok &= expect(chi_value(*fam, sigma, "x").is_one(), "sigma_r(x) = 1");
    ok &= expect(chi_value(*fam, sigma, "g") == -Scalar::one(Q()),
                 "sigma_r(g) = -1");
    auto io = family_integral_order(*fam, 10000);
    ok &= expect(io && *io == 2, "io = 2");
    ok &= expect(io && *io == 2, "dim H_iq = io = 2");
    return ok;
  });

  criterion("5. Two-step reduction chain (dihedral-by-Z group)", [] {
    auto fam = example85_family(Q());
    bool ok = expect(verify_chain(*fam).ok(), "chain verifies");
    FamilyCharacter alpha = integral_character(*fam);
    for (std::size_t i = 0; i < fam->arity(); ++i)
      ok &= expect(alpha.values[i].is_one(), "integral character is trivial");
    ok &= expect(*family_integral_order(*fam, 10000) == 1, "io = 1");
    return ok;
  });

  criterion("6. Tensor laws: io is the lcm of the factors", [] {
    FieldPtr q6 = FieldSpec::cyclotomic(Q(), 6);
    FiniteHopfAlgebra a = taft_finite(q6, 3);
    FiniteHopfAlgebra b = sweedler_algebra(q6);
    bool ok = expect(*integral_order(tensor_hopf(a, b), 10000) == 6,
                     "io(taft(3) (x) sweedler) = 6");
    FieldPtr q3 = FieldSpec::cyclotomic(Q(), 3);
    FiniteHopfAlgebra t = taft_finite(q3, 3);
    FiniteHopfAlgebra tt = tensor_hopf(t, t);
    ok &= expect(tt.dim() == 81, "dim = 81");
    ok &= expect(*integral_order(tt, 10000) == 3, "io(taft(3)^{(x)2}) = 3");
    return ok;
  });

  criterion("7. Taft truncations H/J^s for s = 1..4", [] {
    FieldPtr q3 = FieldSpec::cyclotomic(Q(), 3);
    auto fam = taft_family(q3, 3, 1, 1);
    bool ok = true;
    for (unsigned long s = 1; s <= 4; ++s) {
      TruncationResult tr = truncate(*fam, s);
      Subspace rad = jacobson_radical(tr.algebra);
      std::vector<std::size_t> dims{tr.algebra.dim};
      Subspace p = rad;
      while (p.dim() > 0) {
        dims.push_back(p.dim());
        p = subspace_product(tr.algebra, p, rad);
      }
      dims.push_back(0);
      ok &= expect(dims.size() == s + 1, "radical is nilpotent of index s");
      for (std::size_t t = 0; t + 1 < dims.size(); ++t)
        ok &= expect(dims[t] - dims[t + 1] == 3, "every layer has dim n");
      Subspace fixed = fixed_subalgebra(tr.algebra, tr.windings);
      ok &= expect(fixed.dim() == s, "fixed subalgebra has dim s");
      ok &= expect(subspace_commutative(tr.algebra, fixed),
                   "fixed subalgebra commutative");
      for (unsigned long b = 0; b < s; ++b) {
        Monomial m{0, (long)b};
        std::size_t idx = tr.basis.size();
        for (std::size_t i = 0; i < tr.basis.size(); ++i)
          if (tr.basis[i] == m) idx = i;
        ok &= expect(idx < tr.basis.size() &&
                         subspace_member(fixed,
                                         unit_vec(q3, tr.algebra.dim, idx)),
                     "fixed subalgebra contains x^b");
      }
    }
    return ok;
  });

  criterion("8. Circle Hopf algebra and its base-change witness", [] {
    FiniteHopfAlgebra c = circle_hopf(Q(), Scalar::one(Q()));
    bool ok = expect(verify_axioms(c).all_passed(), "axioms over Q");
    FieldPtr q4 = FieldSpec::cyclotomic(Q(), 4);
    FiniteHopfAlgebra cf = base_change(c, q4);
    // witness built from z = x + iy, z^{-1} = x - iy: z is group-like and
    // z^2 = 2x^2 - 1 has order 2, so the group of group-likes is cyclic of
    // order 4 and 1, g, g^2, g^3 -> 1, z, z^2, z^3 is the witness.
    Scalar i = Scalar::root(q4);
    Vec z{Scalar::zero(q4), Scalar::one(q4), i, Scalar::zero(q4)};
    Vec z2 = cf.alg.product(z, z);
    Vec z3 = cf.alg.product(z2, z);
    std::vector<Vec> images = {cf.alg.unit, z, z2, z3};
    Matrix wit(q4, 4, 4);
    for (std::size_t col = 0; col < 4; ++col)
      for (std::size_t row = 0; row < 4; ++row)
        wit.at(row, col) = images[col][row];
    FiniteHopfAlgebra target = cyclic_group_algebra(q4, 4);
    ok &= expect(verify_hopf_morphism(wit, target, cf) && rank(wit) == 4,
                 "witness is a Hopf isomorphism onto a group algebra");
    // the group of group-likes is Z4, not Z2 x Z2: the same witness images
    // cannot define a morphism from the Klein four group algebra
    FiniteHopfAlgebra klein = base_change(klein_four_algebra(Q()), q4);
    ok &= expect(!verify_hopf_morphism(wit, klein, cf),
                 "no witness onto the Klein four group algebra");
    ok &= expect(!is_zero_vec(sub(z2, cf.alg.unit)), "z^2 != 1");
    return ok;
  });

  criterion("9. Property suite across all presets", [] {
    bool ok = true;
    FieldPtr q12 = FieldSpec::cyclotomic(Q(), 12);
    for (const BuiltPreset& p : all_finite_presets()) {
      const FiniteHopfAlgebra& h = *p.finite;
      IntegralData data = compute_integrals(h); // 1-dimensional or throws
      auto io = integral_order(h, 10000);       // both routes must agree
      ok &= expect(io.has_value(), "io finite on finite presets");
      ok &= expect(s_twist_identity_check(h, data), "alpha_l = sigma_r o S");
      HopfQuotientResult iq = integral_quotient(h);
      ok &= expect(iq.quotient.dim() == *io, "dim H_iq = io");
      ok &= expect(abelianization(h).quotient.dim() % *io == 0,
                   "io divides dim H_ab");
      Subspace co = coinvariants(h, iq);
      Subspace fx = fixed_subalgebra(h.alg, winding_group(h));
      ok &= expect(co == fx, "coinvariants = winding fixed points");
      if (h.field()->kind() == field_kind::rational) {
        FiniteHopfAlgebra hf = base_change(h, q12);
        ok &= expect(integral_order(hf, 10000) == io, "io stable under Q -> Q(z12)");
        ok &= expect(is_unimodular(hf) == is_unimodular(h, data),
                     "unimodularity stable under base change");
      }
    }
    return ok;
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
