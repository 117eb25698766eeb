#include "hopfint/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hopfint {

const char* errc_name(errc c) {
  switch (c) {
  case errc::field_mismatch: return "FIELD_MISMATCH";
  case errc::division_by_zero: return "DIVISION_BY_ZERO";
  case errc::root_unavailable: return "ROOT_UNAVAILABLE";
  case errc::ambient_mismatch: return "AMBIENT_MISMATCH";
  case errc::not_invertible: return "NOT_INVERTIBLE";
  case errc::dim_mismatch: return "DIM_MISMATCH";
  case errc::improper_ideal: return "IMPROPER_IDEAL";
  case errc::unsupported_characteristic: return "UNSUPPORTED_CHARACTERISTIC";
  case errc::not_automorphism: return "NOT_AUTOMORPHISM";
  case errc::integral_dim_not_one: return "INTEGRAL_DIM_NOT_ONE";
  case errc::consistency_failure: return "CONSISTENCY_FAILURE";
  case errc::not_a_character: return "NOT_A_CHARACTER";
  case errc::order_infinite: return "ORDER_INFINITE";
  case errc::not_hopf_ideal: return "NOT_HOPF_IDEAL";
  case errc::relator_violation: return "RELATOR_VIOLATION";
  case errc::truncation_undeclared: return "TRUNCATION_UNDECLARED";
  case errc::invalid_params: return "INVALID_PARAMS";
  case errc::incompatible_extension: return "INCOMPATIBLE_EXTENSION";
  case errc::parse_error: return "PARSE_ERROR";
  case errc::unsupported_operation: return "UNSUPPORTED_OPERATION";
  }
  return "UNKNOWN";
}

namespace {

bool is_prime_ul(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
  return (unsigned long)((__uint128_t)a * b % p);
}

unsigned long addmod(unsigned long a, unsigned long b, unsigned long p) {
  unsigned long s = a + b;
  if (s >= p || s < a) s -= p;
  return s;
}

unsigned long submod(unsigned long a, unsigned long b, unsigned long p) {
  return a >= b ? a - b : a + p - b;
}

unsigned long powmod(unsigned long b, unsigned long e, unsigned long p) {
  unsigned long r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

unsigned long invmod(unsigned long a, unsigned long p) {
  if (a % p == 0) throw Error(errc::division_by_zero, "inverse of 0 mod p");
  // Fermat; p is prime by FieldSpec invariant.
  return powmod(a % p, p - 2, p);
}

// ---- dense polynomial helpers over F_p (coefficients c_0..c_d) ----

void ptrim(std::vector<unsigned long>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<unsigned long> pmul(const std::vector<unsigned long>& a,
                                const std::vector<unsigned long>& b,
                                unsigned long p) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  ptrim(r);
  return r;
}

// a mod m in place (m monic).
void pmod(std::vector<unsigned long>& a, const std::vector<unsigned long>& m,
          unsigned long p) {
  std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    unsigned long lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    if (lead != 0)
      for (std::size_t i = 0; i < m.size(); ++i)
        a[shift + i] = submod(a[shift + i], mulmod(lead, m[i], p), p);
    a.pop_back();
    ptrim(a);
    if (a.size() <= dm) break;
  }
}

bool pdivides(const std::vector<unsigned long>& f,
              const std::vector<unsigned long>& g, unsigned long p) {
  // does monic f divide g?
  std::vector<unsigned long> r = g;
  pmod(r, f, p);
  ptrim(r);
  return r.empty();
}

// extended gcd over F_p[x]: returns (g, u) with u*a = g mod m, g = gcd(a, m).
void pxgcd(std::vector<unsigned long> a, std::vector<unsigned long> b,
           unsigned long p, std::vector<unsigned long>& g,
           std::vector<unsigned long>& u) {
  std::vector<unsigned long> u0 = {1}, u1 = {};
  ptrim(a); ptrim(b);
  while (!b.empty()) {
    // divide a by b
    std::vector<unsigned long> q, r = a;
    unsigned long binv = invmod(b.back(), p);
    if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, 0);
    while (r.size() >= b.size() && !r.empty()) {
      unsigned long c = mulmod(r.back(), binv, p);
      std::size_t shift = r.size() - b.size();
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i)
        r[shift + i] = submod(r[shift + i], mulmod(c, b[i], p), p);
      ptrim(r);
    }
    // (a,b) <- (b,r); (u0,u1) <- (u1, u0 - q*u1)
    std::vector<unsigned long> qu = pmul(q, u1, p);
    std::vector<unsigned long> nu(std::max(u0.size(), qu.size()), 0);
    for (std::size_t i = 0; i < nu.size(); ++i) {
      unsigned long x = i < u0.size() ? u0[i] : 0;
      unsigned long y = i < qu.size() ? qu[i] : 0;
      nu[i] = submod(x, y, p);
    }
    ptrim(nu);
    a.swap(b);
    b.swap(r);
    u0.swap(u1);
    u1.swap(nu);
  }
  g = a;
  u = u0;
}

// ---- dense polynomial helpers over Q ----

void qtrim(std::vector<mpq_class>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<mpq_class> qmul(const std::vector<mpq_class>& a,
                            const std::vector<mpq_class>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<mpq_class> r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  qtrim(r);
  return r;
}

void qmod(std::vector<mpq_class>& a, const std::vector<mpq_class>& m) {
  std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    mpq_class lead = a.back(); // m is monic
    std::size_t shift = a.size() - 1 - dm;
    if (lead != 0)
      for (std::size_t i = 0; i < m.size(); ++i)
        a[shift + i] -= lead * m[i];
    a.pop_back();
    qtrim(a);
    if (a.size() <= dm) break;
  }
}

// exact division q = a / b (remainder must vanish)
std::vector<mpq_class> qdiv_exact(std::vector<mpq_class> a,
                                  const std::vector<mpq_class>& b) {
  std::vector<mpq_class> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0,
                           mpq_class(0));
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= c * b[i];
    qtrim(a);
  }
  if (!a.empty())
    throw Error(errc::parse_error, "inexact polynomial division");
  return q;
}

void qxgcd(std::vector<mpq_class> a, std::vector<mpq_class> b,
           std::vector<mpq_class>& g, std::vector<mpq_class>& u) {
  std::vector<mpq_class> u0 = {mpq_class(1)}, u1;
  qtrim(a); qtrim(b);
  while (!b.empty()) {
    std::vector<mpq_class> q, r = a;
    if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, mpq_class(0));
    while (r.size() >= b.size() && !r.empty()) {
      mpq_class c = r.back() / b.back();
      std::size_t shift = r.size() - b.size();
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i)
        r[shift + i] -= c * b[i];
      qtrim(r);
    }
    std::vector<mpq_class> qu = qmul(q, u1);
    std::vector<mpq_class> nu(std::max(u0.size(), qu.size()), mpq_class(0));
    for (std::size_t i = 0; i < nu.size(); ++i) {
      mpq_class x = i < u0.size() ? u0[i] : mpq_class(0);
      mpq_class y = i < qu.size() ? qu[i] : mpq_class(0);
      nu[i] = x - y;
    }
    qtrim(nu);
    a.swap(b);
    b.swap(r);
    u0.swap(u1);
    u1.swap(nu);
  }
  g = a;
  u = u0;
}

std::string mpq_str(const mpq_class& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

} // namespace

// ---------------------------------------------------------------------------
// FieldSpec

std::vector<mpq_class> cyclotomic_polynomial(unsigned long n) {
  static std::mutex mu;
  static std::map<unsigned long, std::vector<mpq_class>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
  // inside the cache (iterate d ascending so dependencies are ready).
  std::vector<unsigned long> stack;
  for (unsigned long d = 1; d <= n; ++d)
    if (n % d == 0 && cache.find(d) == cache.end()) stack.push_back(d);
  for (unsigned long d : stack) {
    std::vector<mpq_class> num(d + 1, mpq_class(0));
    num[0] = -1;
    num[d] = 1;
    for (unsigned long e = 1; e < d; ++e)
      if (d % e == 0) num = qdiv_exact(num, cache.at(e));
    cache[d] = num;
  }
  return cache.at(n);
}

FieldPtr FieldSpec::rationals() {
  static FieldPtr q = [] {
    auto f = std::shared_ptr<FieldSpec>(new FieldSpec());
    f->kind_ = field_kind::rational;
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr FieldSpec::prime(unsigned long p) {
  if (!is_prime_ul(p))
    throw Error(errc::invalid_params, "modulus " + std::to_string(p) + " is not prime");
  auto f = std::shared_ptr<FieldSpec>(new FieldSpec());
  f->kind_ = field_kind::prime;
  f->p_ = p;
  return f;
}

FieldPtr FieldSpec::cyclotomic(const FieldPtr& base, unsigned long n) {
  if (!base || base->kind() == field_kind::cyclotomic)
    throw Error(errc::invalid_params, "cyclotomic base must be Q or F_p");
  if (n == 0) throw Error(errc::invalid_params, "cyclotomic order must be positive");
  auto f = std::shared_ptr<FieldSpec>(new FieldSpec());
  f->kind_ = field_kind::cyclotomic;
  f->n_ = n;
  if (base->kind() == field_kind::rational) {
    f->p_ = 0;
    f->mod_q_ = cyclotomic_polynomial(n);
  } else {
    unsigned long p = base->characteristic();
    if (n % p == 0)
      throw Error(errc::invalid_params, "p must not divide N for F_p(zeta_N)");
    f->p_ = p;
    // Phi_n mod p
    std::vector<mpq_class> phi = cyclotomic_polynomial(n);
    std::vector<unsigned long> phip(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) {
      mpz_class num = phi[i].get_num(); // denominators are 1
      mpz_class r = num % mpz_class((unsigned long)p);
      if (r < 0) r += mpz_class((unsigned long)p);
      phip[i] = r.get_ui();
    }
    // smallest monic divisor, degrees ascending, coefficient tuples in lex
    // order on (c_{d-1},...,c_0)
    std::vector<unsigned long> found;
    for (std::size_t d = 1; d + 1 <= phip.size() && found.empty(); ++d) {
      double total = 1;
      for (std::size_t i = 0; i < d; ++i) total *= (double)p;
      if (total > 2e7)
        throw Error(errc::invalid_params, "cyclotomic factor search too large");
      std::vector<unsigned long> cand(d + 1, 0);
      cand[d] = 1;
      unsigned long count = (unsigned long)total;
      for (unsigned long m = 0; m < count; ++m) {
        // base-p digits of m, most significant digit -> c_{d-1}, so the scan
        // is lex order on descending-power coefficient tuples
        unsigned long v = m;
        for (std::size_t i = 0; i < d; ++i) {
          cand[i] = v % p;
          v /= p;
        }
        if (pdivides(cand, phip, p)) {
          found = cand;
          break;
        }
      }
    }
    if (found.empty())
      throw Error(errc::consistency_failure, "no factor of Phi_N mod p found");
    f->mod_p_ = found;
  }
  return f;
}

std::size_t FieldSpec::extension_degree() const {
  if (kind_ != field_kind::cyclotomic) return 1;
  return (p_ == 0 ? mod_q_.size() : mod_p_.size()) - 1;
}

bool FieldSpec::operator==(const FieldSpec& o) const {
  if (kind_ != o.kind_ || p_ != o.p_ || n_ != o.n_) return false;
  return mod_q_ == o.mod_q_ && mod_p_ == o.mod_p_;
}

std::string FieldSpec::to_string() const {
  switch (kind_) {
  case field_kind::rational: return "Q";
  case field_kind::prime: return "F" + std::to_string(p_);
  case field_kind::cyclotomic:
    return (p_ == 0 ? std::string("Q") : "F" + std::to_string(p_)) + "(z" +
           std::to_string(n_) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Scalar

void Scalar::canonicalize() {
  std::size_t deg = fld_->extension_degree();
  if (fld_->characteristic() == 0) {
    qc_.resize(deg, mpq_class(0));
    if (fld_->kind() == field_kind::cyclotomic) {
      std::vector<mpq_class> t = qc_;
      qtrim(t);
      qmod(t, fld_->modulus_q());
      t.resize(deg, mpq_class(0));
      qc_ = std::move(t);
    }
    for (auto& c : qc_) c.canonicalize();
  } else {
    unsigned long p = fld_->characteristic();
    pc_.resize(deg, 0);
    if (fld_->kind() == field_kind::cyclotomic) {
      std::vector<unsigned long> t = pc_;
      ptrim(t);
      pmod(t, fld_->modulus_p(), p);
      t.resize(deg, 0);
      pc_ = std::move(t);
    } else {
      pc_[0] %= p;
    }
  }
}

Scalar Scalar::zero(const FieldPtr& f) {
  Scalar s;
  s.fld_ = f;
  s.canonicalize();
  return s;
}

Scalar Scalar::one(const FieldPtr& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldPtr& f, long v) {
  Scalar s = zero(f);
  if (f->characteristic() == 0) {
    s.qc_[0] = v;
  } else {
    unsigned long p = f->characteristic();
    long r = v % (long)p;
    if (r < 0) r += (long)p;
    s.pc_[0] = (unsigned long)r;
  }
  return s;
}

Scalar Scalar::from_mpq(const FieldPtr& f, const mpq_class& v) {
  Scalar s = zero(f);
  if (f->characteristic() == 0) {
    s.qc_[0] = v;
    s.qc_[0].canonicalize();
  } else {
    unsigned long p = f->characteristic();
    mpz_class den = v.get_den() % mpz_class(p);
    if (den == 0) throw Error(errc::division_by_zero, "denominator is 0 mod p");
    mpz_class num = v.get_num() % mpz_class(p);
    if (num < 0) num += mpz_class(p);
    s.pc_[0] = mulmod(num.get_ui(), invmod(den.get_ui(), p), p);
  }
  return s;
}

Scalar Scalar::root(const FieldPtr& f) {
  if (f->kind() != field_kind::cyclotomic)
    throw Error(errc::root_unavailable, "field has no adjoined root");
  Scalar s = zero(f);
  if (f->extension_degree() == 1) {
    // degenerate: modulus is linear, the root is -c_0
    if (f->characteristic() == 0)
      s.qc_[0] = -f->modulus_q()[0];
    else
      s.pc_[0] = submod(0, f->modulus_p()[0], f->characteristic());
  } else if (f->characteristic() == 0) {
    s.qc_[1] = 1;
  } else {
    s.pc_[1] = 1;
  }
  return s;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!fld_ || !o.fld_)
    throw Error(errc::field_mismatch, "operation on invalid scalar");
  if (!(*fld_ == *o.fld_))
    throw Error(errc::field_mismatch,
                fld_->to_string() + " vs " + o.fld_->to_string());
}

bool Scalar::is_zero() const {
  if (!fld_) throw Error(errc::field_mismatch, "invalid scalar");
  if (fld_->characteristic() == 0) {
    for (const auto& c : qc_)
      if (c != 0) return false;
  } else {
    for (auto c : pc_)
      if (c != 0) return false;
  }
  return true;
}

bool Scalar::is_one() const { return *this == one(fld_); }

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return qc_ == o.qc_ && pc_ == o.pc_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar r = *this;
  if (fld_->characteristic() == 0)
    for (std::size_t i = 0; i < qc_.size(); ++i) r.qc_[i] += o.qc_[i];
  else
    for (std::size_t i = 0; i < pc_.size(); ++i)
      r.pc_[i] = addmod(pc_[i], o.pc_[i], fld_->characteristic());
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar r = *this;
  if (fld_->characteristic() == 0)
    for (std::size_t i = 0; i < qc_.size(); ++i) r.qc_[i] -= o.qc_[i];
  else
    for (std::size_t i = 0; i < pc_.size(); ++i)
      r.pc_[i] = submod(pc_[i], o.pc_[i], fld_->characteristic());
  return r;
}

Scalar Scalar::operator-() const { return zero(fld_) - *this; }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar r = zero(fld_);
  if (fld_->characteristic() == 0) {
    if (qc_.size() == 1) {
      r.qc_[0] = qc_[0] * o.qc_[0];
    } else {
      std::vector<mpq_class> prod = qmul(qc_, o.qc_);
      qmod(prod, fld_->modulus_q());
      prod.resize(qc_.size(), mpq_class(0));
      r.qc_ = std::move(prod);
      for (auto& c : r.qc_) c.canonicalize();
    }
  } else {
    unsigned long p = fld_->characteristic();
    if (pc_.size() == 1) {
      r.pc_[0] = mulmod(pc_[0], o.pc_[0], p);
    } else {
      std::vector<unsigned long> prod = pmul(pc_, o.pc_, p);
      pmod(prod, fld_->modulus_p(), p);
      prod.resize(pc_.size(), 0);
      r.pc_ = std::move(prod);
    }
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(errc::division_by_zero, "inverse of zero");
  Scalar r = zero(fld_);
  if (fld_->characteristic() == 0) {
    if (qc_.size() == 1) {
      r.qc_[0] = mpq_class(1) / qc_[0];
    } else {
      std::vector<mpq_class> g, u, a = qc_;
      qtrim(a);
      qxgcd(a, fld_->modulus_q(), g, u);
      // g is a nonzero constant (modulus irreducible)
      mpq_class c = g[0];
      for (auto& x : u) x /= c;
      u.resize(qc_.size(), mpq_class(0));
      r.qc_ = std::move(u);
      for (auto& x : r.qc_) x.canonicalize();
    }
  } else {
    unsigned long p = fld_->characteristic();
    if (pc_.size() == 1) {
      r.pc_[0] = invmod(pc_[0], p);
    } else {
      std::vector<unsigned long> g, u, a = pc_;
      ptrim(a);
      pxgcd(a, fld_->modulus_p(), p, g, u);
      unsigned long c = invmod(g[0], p);
      for (auto& x : u) x = mulmod(x, c, p);
      u.resize(pc_.size(), 0);
      r.pc_ = std::move(u);
    }
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? (unsigned long)(-e) : (unsigned long)e;
  Scalar r = one(fld_);
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

std::string Scalar::to_string() const {
  if (!fld_) return "<invalid>";
  if (fld_->kind() != field_kind::cyclotomic) {
    if (fld_->characteristic() == 0) return mpq_str(qc_[0]);
    return std::to_string(pc_[0]);
  }
  std::string out;
  std::size_t deg = fld_->extension_degree();
  for (std::size_t i = 0; i < deg; ++i) {
    std::string c = fld_->characteristic() == 0 ? mpq_str(qc_[i])
                                                : std::to_string(pc_[i]);
    if (i > 0 && c[0] != '-') out += "+";
    out += c;
    if (i == 1) out += "*z";
    if (i > 1) out += "*z^" + std::to_string(i);
  }
  return out;
}

namespace {

mpq_class parse_rational(const std::string& raw) {
  std::string t = raw;
  if (!t.empty() && t[0] == '+') t = t.substr(1); // GMP rejects leading '+'
  if (t.empty()) throw Error(errc::parse_error, "empty rational");
  for (char ch : t)
    if (!(std::isdigit((unsigned char)ch) || ch == '-' || ch == '/'))
      throw Error(errc::parse_error, "bad rational '" + raw + "'");
  try {
    mpq_class q(t);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(errc::parse_error, "bad rational '" + raw + "'");
  }
}

} // namespace

Scalar Scalar::parse(const FieldPtr& f, const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace((unsigned char)c)) t += c;
  if (t.empty()) throw Error(errc::parse_error, "empty scalar");

  if (f->kind() != field_kind::cyclotomic) {
    if (t.find('z') != std::string::npos)
      throw Error(errc::parse_error, "root symbol in base-field scalar");
    return from_mpq(f, parse_rational(t));
  }

  // split into signed terms; a sign after *, /, ^ or another sign stays
  // inside its term
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= t.size(); ++i) {
    if (i == t.size() ||
        ((t[i] == '+' || t[i] == '-') && t[i - 1] != '*' && t[i - 1] != '/' &&
         t[i - 1] != '^' && t[i - 1] != '+' && t[i - 1] != '-')) {
      terms.push_back(t.substr(start, i - start));
      start = i;
    }
  }
  Scalar acc = zero(f);
  Scalar z = root(f);
  for (std::string term : terms) {
    long expo = 0;
    std::string coeff = term;
    std::size_t zi = term.find('z');
    if (zi != std::string::npos) {
      std::string tail = term.substr(zi + 1);
      if (tail.empty())
        expo = 1;
      else if (tail[0] == '^')
        expo = std::stol(tail.substr(1));
      else
        throw Error(errc::parse_error, "bad term '" + term + "'");
      if (expo < 0) throw Error(errc::parse_error, "negative root power");
      if (zi == 0)
        coeff = "1";
      else if (zi == 1 && (term[0] == '-' || term[0] == '+'))
        coeff = std::string(1, term[0]) + "1";
      else if (term[zi - 1] == '*')
        coeff = term.substr(0, zi - 1);
      else
        throw Error(errc::parse_error, "missing '*' in '" + term + "'");
    }
    Scalar c = from_mpq(f, parse_rational(coeff));
    acc = acc + c * z.pow(expo);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// roots of unity, order, coercion

std::optional<unsigned long> multiplicative_order(const Scalar& s,
                                                  unsigned long cap) {
  if (s.is_zero())
    throw Error(errc::invalid_params, "order of zero is undefined");
  Scalar p = s;
  for (unsigned long n = 1; n <= cap; ++n) {
    if (p.is_one()) return n;
    p = p * s;
  }
  return std::nullopt;
}

Scalar primitive_root_of_unity(const FieldPtr& f, unsigned long n) {
  if (n == 0) throw Error(errc::invalid_params, "order must be positive");
  if (n == 1) return Scalar::one(f);
  unsigned long p = f->characteristic();
  if (p != 0 && n % p == 0)
    throw Error(errc::root_unavailable, "order divisible by characteristic");
  if (n == 2) {
    if (p == 2) throw Error(errc::root_unavailable, "no element of order 2 in char 2");
    return -Scalar::one(f);
  }
  switch (f->kind()) {
  case field_kind::rational:
    throw Error(errc::root_unavailable,
                "Q contains no root of order " + std::to_string(n));
  case field_kind::prime: {
    if ((p - 1) % n != 0)
      throw Error(errc::root_unavailable,
                  "F_p has no element of order " + std::to_string(n));
    for (unsigned long g = 2; g < p; ++g) {
      Scalar s = Scalar::from_int(f, (long)g);
      auto ord = multiplicative_order(s, n);
      if (ord && *ord == n) return s;
    }
    throw Error(errc::root_unavailable, "search exhausted");
  }
  case field_kind::cyclotomic: {
    unsigned long m = f->cyclotomic_order();
    if (m % n != 0)
      throw Error(errc::root_unavailable,
                  std::to_string(n) + " does not divide " + std::to_string(m));
    Scalar s = Scalar::root(f).pow((long)(m / n));
    auto ord = multiplicative_order(s, n);
    if (!ord || *ord != n)
      throw Error(errc::consistency_failure, "root has unexpected order");
    return s;
  }
  }
  throw Error(errc::root_unavailable, "unreachable");
}

bool coercible(const FieldPtr& from, const FieldPtr& to) {
  if (*from == *to) return true;
  if (to->kind() != field_kind::cyclotomic) return false;
  if (from->kind() == field_kind::rational) return to->characteristic() == 0;
  if (from->kind() == field_kind::prime)
    return to->characteristic() == from->characteristic();
  // cyclotomic -> cyclotomic over the same base, order dividing
  return from->characteristic() == to->characteristic() &&
         to->cyclotomic_order() % from->cyclotomic_order() == 0;
}

Scalar coerce(const Scalar& s, const FieldPtr& target) {
  const FieldPtr& from = s.field();
  if (*from == *target) return s;
  if (!coercible(from, target))
    throw Error(errc::incompatible_extension,
                from->to_string() + " -> " + target->to_string());
  if (from->kind() != field_kind::cyclotomic) {
    if (target->characteristic() == 0)
      return Scalar::from_mpq(target, s.qcoeffs()[0]);
    return Scalar::from_int(target, (long)s.pcoeffs()[0]);
  }
  // cyclotomic -> cyclotomic: send zeta_N to a power of zeta_M that is a
  // root of the source modulus (over Q the first candidate works; over F_p
  // the chosen factor may vanish on a different primitive root, so scan).
  unsigned long n = from->cyclotomic_order();
  unsigned long m = target->cyclotomic_order();
  Scalar zm = Scalar::root(target);
  Scalar image = Scalar::zero(target);
  bool found = false;
  for (unsigned long t = 1; t <= n && !found; ++t) {
    if (std::gcd(t, n) != 1) continue;
    Scalar cand = zm.pow((long)(t * (m / n)));
    // evaluate source modulus at cand
    Scalar val = Scalar::zero(target);
    Scalar power = Scalar::one(target);
    std::size_t len = from->characteristic() == 0 ? from->modulus_q().size()
                                                  : from->modulus_p().size();
    for (std::size_t i = 0; i < len; ++i) {
      Scalar ci = from->characteristic() == 0
                      ? Scalar::from_mpq(target, from->modulus_q()[i])
                      : Scalar::from_int(target, (long)from->modulus_p()[i]);
      val = val + ci * power;
      power = power * cand;
    }
    if (val.is_zero()) {
      image = cand;
      found = true;
    }
  }
  if (!found)
    throw Error(errc::incompatible_extension, "no compatible root image");
  Scalar acc = Scalar::zero(target);
  Scalar power = Scalar::one(target);
  std::size_t deg = from->extension_degree();
  for (std::size_t i = 0; i < deg; ++i) {
    Scalar ci = from->characteristic() == 0
                    ? Scalar::from_mpq(target, s.qcoeffs()[i])
                    : Scalar::from_int(target, (long)s.pcoeffs()[i]);
    acc = acc + ci * power;
    power = power * image;
  }
  return acc;
}

} // namespace hopfint
