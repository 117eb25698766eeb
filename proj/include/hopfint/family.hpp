#ifndef HOPFINT_FAMILY_HPP
#define HOPFINT_FAMILY_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfint/hopf.hpp"

namespace hopfint {

/// Word in the generators: a sequence of generator indices. Inverses are
/// ordinary generators tied to their partner by relators.
using Word = std::vector<std::size_t>;

/// Basis monomial of a presented algebra: one exponent slot per basis
/// generator; the per-preset oracle fixes the semantics (bounded, natural
/// or integer exponents).
using Monomial = std::vector<long>;

/// Canonical linear combination of basis monomials.
using LinComb = std::map<Monomial, Scalar>;

struct WTerm {
  Scalar coeff;
  Word word;
};
using WordExpr = std::vector<WTerm>; // linear combination of words

struct TensorTerm {
  Scalar coeff;
  Word left, right;
};
using TensorExpr = std::vector<TensorTerm>;

/// Element of the tensor square in normal form.
using TensorComb = std::map<std::pair<Monomial, Monomial>, Scalar>;

/// Hopf structure data of one generator.
struct GenHopf {
  TensorExpr delta;
  Scalar counit;
  WordExpr antipode;
};

/// One witness term for Delta(w) in (w)(x)H + H(x)(w): coeff * (pre w post)
/// (x) other, or mirrored when w_on_left is false.
struct WitnessTerm {
  Scalar coeff;
  bool w_on_left;
  Word pre, post, other;
};

/// Reduction by a normal non-zero-divisor w with w h = tau(h) w; the stage
/// quotient H/(w) is the next stage of the chain.
struct ReductionStep {
  WordExpr normal_element;
  std::vector<WordExpr> twist;         // tau, per generator
  std::vector<WordExpr> twist_inverse; // tau^{-1}, per generator
  std::vector<WitnessTerm> hopf_ideal_witness;
  std::vector<WordExpr> projection; // generator -> expression in next stage
};

struct TruncationSpec {
  std::function<std::vector<Monomial>(unsigned long s)> basis;
  std::function<bool(const Monomial&, unsigned long s)> in_basis;
};

/// Infinite-dimensional Hopf algebra presented by generators with a
/// normal-form oracle, Hopf data on generators, and a reduction chain of
/// normal elements terminating in a finite-dimensional Hopf algebra.
struct PresentedHopfFamily {
  std::string name;
  FieldPtr field;
  std::vector<std::string> gen_names;
  std::function<LinComb(const Word&)> normal_form;
  std::function<Word(const Monomial&)> monomial_word;
  std::function<std::string(const Monomial&)> monomial_name;
  std::vector<WordExpr> relators; // must normalize to 0
  std::vector<GenHopf> hopf;

  // exactly one of the following is engaged
  std::optional<ReductionStep> step;
  std::shared_ptr<const PresentedHopfFamily> next;
  std::optional<FiniteHopfAlgebra> terminal;
  std::vector<Vec> terminal_projection; // generator -> vector in terminal

  std::optional<TruncationSpec> truncation;
  /// PI degree when a closed form is known for the preset (prime
  /// GK-dimension-1 families have io = PI degree; the rank-two group
  /// algebra is the standard counterexample one dimension up).
  std::optional<unsigned long> pi_degree;

  std::size_t arity() const { return gen_names.size(); }
};

/// Generator-value map of a multiplicative character; every relator must
/// evaluate to 0 under the multiplicative extension.
struct FamilyCharacter {
  std::vector<Scalar> values; // per generator
  bool operator==(const FamilyCharacter& o) const { return values == o.values; }
  bool operator!=(const FamilyCharacter& o) const { return !(*this == o); }
};

// --- expression plumbing ---

LinComb nf_expr(const PresentedHopfFamily& f, const WordExpr& e);
bool nf_is_zero(const PresentedHopfFamily& f, const WordExpr& e);
/// Delta of a word, fully expanded and normalized in the tensor square.
TensorComb delta_word(const PresentedHopfFamily& f, const Word& w);
TensorComb delta_expr(const PresentedHopfFamily& f, const WordExpr& e);
/// Substitute each generator by `images[g]` and expand products.
WordExpr subst(const WordExpr& e, const std::vector<WordExpr>& images);
/// Antipode of an expression via the anti-homomorphism rule.
WordExpr antipode_expr(const PresentedHopfFamily& f, const WordExpr& e);

Scalar eval_character(const PresentedHopfFamily& f, const FamilyCharacter& chi,
                      const WordExpr& e);
bool character_satisfies_relators(const PresentedHopfFamily& f,
                                  const FamilyCharacter& chi);

struct ChainReport {
  std::vector<std::string> failures; // stage/generator annotated
  bool ok() const { return failures.empty(); }
};

/// Verifies, stage by stage: relators normalize to 0; tau is a relator-
/// preserving automorphism with the given inverse; the normality identity
/// w g = tau(g) w on every generator; the Hopf-ideal witness expands to
/// Delta(w); the projection kills w, respects relators and the Hopf data on
/// generators; the terminal Hopf algebra passes all axioms.
ChainReport verify_chain(const PresentedHopfFamily& f);

/// Right-module character of the left integral, pulled back through the
/// chain: terminal alpha_l, precomposed with tau^{-1} and lifted through
/// each quotient-by-(w) projection.
FamilyCharacter integral_character(const PresentedHopfFamily& f);

/// Character of the right integral's left module structure: chi o S.
FamilyCharacter sigma_r_character(const PresentedHopfFamily& f,
                                  const FamilyCharacter& alpha_left);

FamilyCharacter family_counit(const PresentedHopfFamily& f);
FamilyCharacter family_convolution(const PresentedHopfFamily& f,
                                   const FamilyCharacter& a,
                                   const FamilyCharacter& b);

/// Convolution order of the integral character; nullopt = "infinite or
/// beyond cap".
std::optional<unsigned long> family_integral_order(const PresentedHopfFamily& f,
                                                   unsigned long cap = 10000);

/// Orbit {(sigma_r)^{*t} : 0 <= t < io}, pairwise distinct.
std::vector<FamilyCharacter> clique_of_trivial(const PresentedHopfFamily& f,
                                               unsigned long cap = 10000);

struct TruncationResult {
  FiniteAlgebra algebra;
  std::vector<Matrix> windings; // descended winding group, id first
  std::vector<Monomial> basis;
};

/// Finite truncation H/J^s on the declared monomial basis; the winding
/// automorphisms of the family descend (kernel preservation checked on the
/// declared basis and the first layer outside it).
TruncationResult truncate(const PresentedHopfFamily& f, unsigned long s,
                          unsigned long cap = 10000);

} // namespace hopfint

#endif
