#include <doctest.h>

#include "hopfint/presets.hpp"

using namespace hopfint;

namespace {
FieldPtr Q() { return FieldSpec::rationals(); }

Scalar chi_value(const PresentedHopfFamily& f, const FamilyCharacter& chi,
                 const std::string& gen) {
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (f.gen_names[i] == gen) return chi.values[i];
  throw std::runtime_error("no generator " + gen);
}
}

TEST_CASE("chains verify on every family preset") {
  for (const BuiltPreset& p : all_family_presets()) {
    ChainReport rep = verify_chain(*p.family);
    INFO(p.descriptor);
    for (const auto& fail : rep.failures) INFO(fail);
    CHECK(rep.ok());
  }
}

TEST_CASE("normal form oracles invert monomial words") {
  for (const BuiltPreset& p : all_family_presets()) {
    const PresentedHopfFamily& f = *p.family;
    // sample the oracle on words of moderate length
    std::vector<Word> words = {Word{}, Word{0}, Word{0, 0}};
    if (f.arity() > 1) {
      words.push_back(Word{1, 0});
      words.push_back(Word{0, 1, 0, 1});
    }
    for (const Word& w : words) {
      LinComb nf = f.normal_form(w);
      for (const auto& [mon, c] : nf) {
        LinComb back = f.normal_form(f.monomial_word(mon));
        REQUIRE(back.size() == 1);
        CHECK(back.begin()->first == mon);
        CHECK(back.begin()->second.is_one());
      }
    }
  }
}

TEST_CASE("taft family integral data") {
  for (unsigned long n : {2ul, 3ul, 5ul}) {
    FieldPtr f = n == 2 ? Q() : FieldSpec::cyclotomic(Q(), n);
    auto fam = taft_family(f, n);
    REQUIRE(verify_chain(*fam).ok());
    FamilyCharacter alpha = integral_character(*fam);
    Scalar xi = primitive_root_of_unity(f, n);
    CHECK(chi_value(*fam, alpha, "g") == xi.inverse());
    CHECK(chi_value(*fam, alpha, "x").is_zero());
    CHECK(*family_integral_order(*fam, 100) == n);
    CHECK(clique_of_trivial(*fam, 100).size() == n);
  }
}

TEST_CASE("taft family with m=2, n=4 has io = order of xi^m") {
  FieldPtr q4 = FieldSpec::cyclotomic(Q(), 4);
  auto fam = taft_family(q4, 4, 2, 1);
  REQUIRE(verify_chain(*fam).ok());
  // xi^2 = -1 has order 2
  CHECK(*family_integral_order(*fam, 100) == 2);
}

TEST_CASE("solvable enveloping algebra") {
  auto fam = solvable_enveloping(Q());
  REQUIRE(verify_chain(*fam).ok());
  FamilyCharacter alpha = integral_character(*fam);
  CHECK(chi_value(*fam, alpha, "x").is_zero());
  CHECK(chi_value(*fam, alpha, "y") == -Scalar::one(Q()));
  CHECK_FALSE(family_integral_order(*fam, 200).has_value());

  for (unsigned long p : {3ul, 5ul}) {
    auto famp = solvable_enveloping(FieldSpec::prime(p));
    REQUIRE(verify_chain(*famp).ok());
    CHECK(*family_integral_order(*famp, 100) == p);
  }
}

TEST_CASE("laurent group algebra is unimodular") {
  auto fam = laurent_family(Q());
  REQUIRE(verify_chain(*fam).ok());
  FamilyCharacter alpha = integral_character(*fam);
  for (const Scalar& v : alpha.values) CHECK(v.is_one());
  CHECK(*family_integral_order(*fam, 100) == 1);
  CHECK(clique_of_trivial(*fam, 100).size() == 1);
}

TEST_CASE("infinite dihedral family") {
  auto fam = infinite_dihedral_family(Q());
  REQUIRE(verify_chain(*fam).ok());
  FamilyCharacter alpha = integral_character(*fam);
  FamilyCharacter sigma = sigma_r_character(*fam, alpha);
  CHECK(chi_value(*fam, sigma, "g") == -Scalar::one(Q()));
  CHECK(chi_value(*fam, sigma, "x").is_one());
  CHECK(*family_integral_order(*fam, 100) == 2);
  std::vector<FamilyCharacter> clique = clique_of_trivial(*fam, 100);
  CHECK(clique.size() == 2);
  CHECK(chi_value(*fam, clique[0], "g").is_one());
  CHECK(chi_value(*fam, clique[1], "g") == -Scalar::one(Q()));
  CHECK(chi_value(*fam, clique[1], "x").is_one());
}

TEST_CASE("example85 reduces through the dihedral chain to io = 1") {
  auto fam = example85_family(Q());
  REQUIRE(verify_chain(*fam).ok());
  FamilyCharacter alpha = integral_character(*fam);
  for (const Scalar& v : alpha.values) CHECK(v.is_one());
  CHECK(*family_integral_order(*fam, 100) == 1);
  CHECK(clique_of_trivial(*fam, 100).size() == 1);
}

TEST_CASE("a wrong twist is caught by verify_chain") {
  FieldPtr q3 = FieldSpec::cyclotomic(Q(), 3);
  auto fam = taft_family(q3, 3);
  auto broken = std::make_shared<PresentedHopfFamily>(*fam);
  ReductionStep st = *broken->step;
  st.twist[0] = {WTerm{Scalar::one(q3), {0}}}; // tau(g) = g drops the root
  broken->step = st;
  ChainReport rep = verify_chain(*broken);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("taft truncations") {
  FieldPtr q3 = FieldSpec::cyclotomic(Q(), 3);
  auto fam = taft_family(q3, 3);

  TruncationResult t2 = truncate(*fam, 2);
  CHECK(t2.algebra.dim == 6);
  Subspace rad2 = jacobson_radical(t2.algebra);
  CHECK(rad2.dim() == 3);
  CHECK(subspace_product(t2.algebra, rad2, rad2).dim() == 0); // J^2 = 0

  TruncationResult t4 = truncate(*fam, 4);
  CHECK(t4.algebra.dim == 12);
  Subspace rad = jacobson_radical(t4.algebra);
  std::vector<std::size_t> dims{t4.algebra.dim};
  Subspace p = rad;
  while (p.dim() > 0) {
    dims.push_back(p.dim());
    p = subspace_product(t4.algebra, p, rad);
  }
  dims.push_back(0);
  for (std::size_t i = 0; i + 1 < dims.size(); ++i)
    CHECK(dims[i] - dims[i + 1] == 3); // every layer has dimension n

  TruncationResult t3 = truncate(*fam, 3);
  Subspace fixed = fixed_subalgebra(t3.algebra, t3.windings);
  CHECK(fixed.dim() == 3);
  CHECK(subspace_commutative(t3.algebra, fixed));
  // the fixed space is exactly span{1, x, x^2}
  for (std::size_t b = 0; b < 3; ++b) {
    Monomial m{0, (long)b};
    std::size_t idx = 0;
    for (; idx < t3.basis.size(); ++idx)
      if (t3.basis[idx] == m) break;
    CHECK(subspace_member(fixed, unit_vec(q3, t3.algebra.dim, idx)));
  }

  TruncationResult t1 = truncate(*fam, 1);
  CHECK(t1.algebra.dim == 3);
  CHECK(jacobson_radical(t1.algebra).dim() == 0);
}

TEST_CASE("taft truncation at n=2, s=2 equals the Sweedler algebra") {
  auto fam = taft_family(Q(), 2);
  TruncationResult t = truncate(*fam, 2);
  FiniteAlgebra sw = sweedler_algebra(Q()).alg;
  REQUIRE(t.algebra.dim == sw.dim);
  CHECK(t.algebra.mul == sw.mul);
  CHECK(t.algebra.unit == sw.unit);
}

TEST_CASE("families without truncation data refuse to truncate") {
  auto fam = laurent_family(Q());
  CHECK_THROWS_AS(truncate(*fam, 2), Error);
}

TEST_CASE("a wrong Hopf-ideal witness is caught by verify_chain") {
  FieldPtr q3 = FieldSpec::cyclotomic(Q(), 3);
  auto fam = taft_family(q3, 3);
  auto broken = std::make_shared<PresentedHopfFamily>(*fam);
  ReductionStep st = *broken->step;
  st.hopf_ideal_witness.pop_back(); // drop the g^t (x) x leg of Delta(x)
  broken->step = st;
  ChainReport rep = verify_chain(*broken);
  CHECK_FALSE(rep.ok());
  bool witness_named = false;
  for (const auto& f : rep.failures)
    if (f.find("witness") != std::string::npos) witness_named = true;
  CHECK(witness_named);
}
