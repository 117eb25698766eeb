#ifndef HOPFINT_SCALAR_HPP
#define HOPFINT_SCALAR_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hopfint/error.hpp"

namespace hopfint {

enum class field_kind { rational, prime, cyclotomic };

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Descriptor of an exact base field: Q, F_p, or Q(zeta_N) / F_p(zeta_N).
/// Cyclotomic specs carry a fixed modulus polynomial: the N-th cyclotomic
/// polynomial over Q, or its lexicographically smallest monic irreducible
/// factor over F_p (found by trying monic polynomials in degree order, then
/// in lex order on descending-power coefficient tuples).
class FieldSpec {
public:
  static FieldPtr rationals();
  static FieldPtr prime(unsigned long p);
  static FieldPtr cyclotomic(const FieldPtr& base, unsigned long n);

  field_kind kind() const { return kind_; }
  unsigned long characteristic() const { return p_; } // 0 for char-0 fields
  unsigned long cyclotomic_order() const { return n_; }
  std::size_t extension_degree() const; // 1 for base fields
  /// Modulus coefficients c_0..c_d (monic, c_d = 1); empty for base fields.
  const std::vector<mpq_class>& modulus_q() const { return mod_q_; }
  const std::vector<unsigned long>& modulus_p() const { return mod_p_; }

  bool operator==(const FieldSpec& o) const;
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  FieldSpec() = default;
  field_kind kind_ = field_kind::rational;
  unsigned long p_ = 0; // characteristic (0 for rational base)
  unsigned long n_ = 0; // cyclotomic order, 0 for base fields
  std::vector<mpq_class> mod_q_;
  std::vector<unsigned long> mod_p_;
};

/// Immutable exact field element in canonical form. Fractions are reduced
/// with positive denominator; F_p residues lie in [0,p); cyclotomic elements
/// are stored as full-length coefficient vectors (degree < deg modulus),
/// reduced. Equality is representation equality.
class Scalar {
public:
  Scalar() = default; // invalid sentinel; any arithmetic on it throws
  static Scalar zero(const FieldPtr& f);
  static Scalar one(const FieldPtr& f);
  static Scalar from_int(const FieldPtr& f, long v);
  static Scalar from_mpq(const FieldPtr& f, const mpq_class& v);
  /// Class of the fixed root zeta_N (cyclotomic fields only).
  static Scalar root(const FieldPtr& f);
  static Scalar parse(const FieldPtr& f, const std::string& text);

  const FieldPtr& field() const { return fld_; }
  bool valid() const { return fld_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const; // throws division_by_zero
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long e) const; // negative e inverts first

  std::string to_string() const;

  // char-0 payload: coefficients over Q, length = extension degree.
  const std::vector<mpq_class>& qcoeffs() const { return qc_; }
  // char-p payload.
  const std::vector<unsigned long>& pcoeffs() const { return pc_; }

private:
  FieldPtr fld_;
  std::vector<mpq_class> qc_;
  std::vector<unsigned long> pc_;

  void check_same_field(const Scalar& o) const;
  void canonicalize();
};

/// Element of multiplicative order exactly n, or ROOT_UNAVAILABLE.
Scalar primitive_root_of_unity(const FieldPtr& f, unsigned long n);

/// Smallest n <= cap with s^n = 1; nullopt when the cap is exceeded
/// (covers infinite order). Requires s != 0.
std::optional<unsigned long> multiplicative_order(const Scalar& s,
                                                  unsigned long cap = 10000);

/// Coerce a scalar into a larger field (Q -> Q(zeta_N), F_p -> F_p(zeta_N),
/// or cyclotomic -> cyclotomic of divisible order over the same base).
/// Throws incompatible_extension when no embedding is defined.
Scalar coerce(const Scalar& s, const FieldPtr& target);
bool coercible(const FieldPtr& from, const FieldPtr& to);

/// N-th cyclotomic polynomial over Q, coefficients c_0..c_deg.
std::vector<mpq_class> cyclotomic_polynomial(unsigned long n);

} // namespace hopfint

#endif
