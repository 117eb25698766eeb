#include "hopfint/presets.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hopfint {

namespace {

Word reps(std::size_t sym, unsigned long count) {
  return Word(count, sym);
}

WordExpr one_word(const FieldPtr& f, Word w) {
  return {WTerm{Scalar::one(f), std::move(w)}};
}

mpz_class binom_z(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// ---------------------------------------------------------------------------
// finite builders

FiniteHopfAlgebra group_like_hopf(const FieldPtr& f,
                                  const std::vector<std::string>& labels,
                                  const std::vector<std::vector<std::size_t>>& table) {
  std::size_t n = labels.size();
  // locate the identity
  std::size_t id = n;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      ok = table[e][i] == i && table[i][e] == i;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id == n) throw Error(errc::invalid_params, "table has no identity");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] == id) inv[i] = j;
  for (std::size_t i = 0; i < n; ++i)
    if (inv[i] == n) throw Error(errc::invalid_params, "missing inverse");

  FiniteHopfAlgebra h;
  h.alg.field = f;
  h.alg.dim = n;
  h.alg.basis_labels = labels;
  h.alg.unit = unit_vec(f, n, id);
  h.alg.mul.assign(n * n, SparseVec{});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h.alg.mul[i * n + j] = {{table[i][j], Scalar::one(f)}};
  if (auto bad = check_algebra_axioms(h.alg))
    throw Error(errc::invalid_params, "table is not a group: " + *bad);
  h.comul.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    h.comul[i].push_back(CoprodTerm{i, i, Scalar::one(f)});
  h.counit = Vec(n, Scalar::one(f));
  h.antipode = Matrix(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    h.antipode.at(inv[i], i) = Scalar::one(f);
  return h;
}

} // namespace

FiniteHopfAlgebra trivial_hopf(const FieldPtr& f) {
  return group_like_hopf(f, {"1"}, {{0}});
}

FiniteHopfAlgebra group_algebra_from_table(
    const FieldPtr& f, const std::vector<std::string>& labels,
    const std::vector<std::vector<std::size_t>>& table) {
  return group_like_hopf(f, labels, table);
}

FiniteHopfAlgebra cyclic_group_algebra(const FieldPtr& f, unsigned long n) {
  if (n == 0) throw Error(errc::invalid_params, "cyclic order must be positive");
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (unsigned long i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    for (unsigned long j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return group_like_hopf(f, labels, table);
}

FiniteHopfAlgebra klein_four_algebra(const FieldPtr& f) {
  // (a, b) in Z2 x Z2, index 2a + b
  std::vector<std::string> labels = {"1", "b", "a", "ab"};
  std::vector<std::vector<std::size_t>> table(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) table[i][j] = i ^ j;
  return group_like_hopf(f, labels, table);
}

FiniteHopfAlgebra taft_finite(const FieldPtr& f, unsigned long n,
                              unsigned long m, unsigned long t) {
  if (n == 0) throw Error(errc::invalid_params, "n must be positive");
  Scalar xi = primitive_root_of_unity(f, n);
  Scalar q = xi.pow((long)(m * t));
  auto qord = multiplicative_order(q, n + 1);
  if (!qord || *qord != n)
    throw Error(errc::invalid_params,
                "xi^{mt} must have order exactly n so (x^n) is a Hopf ideal");

  std::size_t dim = n * n; // basis g^a x^b, index a*n + b
  FiniteHopfAlgebra h;
  h.alg.field = f;
  h.alg.dim = dim;
  for (unsigned long a = 0; a < n; ++a)
    for (unsigned long b = 0; b < n; ++b) {
      std::string lab;
      if (a == 0 && b == 0) lab = "1";
      else {
        if (a == 1) lab = "g";
        else if (a > 1) lab = "g^" + std::to_string(a);
        if (b > 0) {
          if (!lab.empty()) lab += "*";
          lab += b == 1 ? "x" : "x^" + std::to_string(b);
        }
      }
      h.alg.basis_labels.push_back(lab);
    }
  h.alg.unit = unit_vec(f, dim, 0);
  h.alg.mul.assign(dim * dim, SparseVec{});
  for (unsigned long a = 0; a < n; ++a)
    for (unsigned long b = 0; b < n; ++b)
      for (unsigned long c = 0; c < n; ++c)
        for (unsigned long d = 0; d < n; ++d) {
          // (g^a x^b)(g^c x^d) = xi^{m b c} g^{a+c} x^{b+d}, 0 once b+d >= n
          if (b + d >= n) continue;
          Scalar coeff = xi.pow((long)(m * b * c));
          std::size_t k = ((a + c) % n) * n + (b + d);
          h.alg.mul[(a * n + b) * dim + (c * n + d)] = {{k, coeff}};
        }

  // coproduct computed inside the tensor square of the algebra
  Tensor2 dg, dx;
  dg.emplace((1 * n + 0) * dim + (1 * n + 0), Scalar::one(f)); // g (x) g
  dx.emplace((0 * n + 1) * dim + 0, Scalar::one(f));           // x (x) 1
  dx.emplace(((t % n) * n + 0) * dim + (0 * n + 1), Scalar::one(f)); // g^t (x) x
  h.comul.assign(dim, {});
  for (unsigned long a = 0; a < n; ++a)
    for (unsigned long b = 0; b < n; ++b) {
      Tensor2 acc;
      acc.emplace(0, Scalar::one(f)); // 1 (x) 1
      for (unsigned long i = 0; i < a; ++i) acc = tensor2_product(h.alg, acc, dg);
      for (unsigned long i = 0; i < b; ++i) acc = tensor2_product(h.alg, acc, dx);
      for (const auto& [key, c] : acc)
        h.comul[a * n + b].push_back(CoprodTerm{key / dim, key % dim, c});
    }
  h.counit = zero_vec(f, dim);
  for (unsigned long a = 0; a < n; ++a) h.counit[a * n + 0] = Scalar::one(f);

  // S(g^a x^b) = S(x)^b S(g)^a with S(g) = g^{n-1}, S(x) = -g^{-t} x
  Vec sg = unit_vec(f, dim, ((n - 1) % n) * n + 0);
  Vec sx = scale(-Scalar::one(f),
                 unit_vec(f, dim, (((n - (t % n)) % n) * n + 1)));
  h.antipode = Matrix(f, dim, dim);
  for (unsigned long a = 0; a < n; ++a)
    for (unsigned long b = 0; b < n; ++b) {
      Vec img = h.alg.unit;
      for (unsigned long i = 0; i < b; ++i) img = h.alg.product(img, sx);
      for (unsigned long i = 0; i < a; ++i) img = h.alg.product(img, sg);
      for (std::size_t r = 0; r < dim; ++r) h.antipode.at(r, a * n + b) = img[r];
    }
  return h;
}

FiniteHopfAlgebra sweedler_algebra(const FieldPtr& f) {
  return taft_finite(f, 2, 1, 1);
}

FiniteHopfAlgebra circle_hopf(const FieldPtr& f, const Scalar& xi) {
  if (xi.is_zero()) throw Error(errc::invalid_params, "xi must be nonzero");
  // basis 1, x, y, w (= x^2); relations xy = 0, x^2 + xi y^2 = 1
  const std::size_t N = 4;
  Scalar one = Scalar::one(f), zero = Scalar::zero(f);
  Scalar xinv = xi.inverse();
  FiniteHopfAlgebra h;
  h.alg.field = f;
  h.alg.dim = N;
  h.alg.basis_labels = {"1", "x", "y", "x^2"};
  h.alg.unit = unit_vec(f, N, 0);
  h.alg.mul.assign(N * N, SparseVec{});
  auto set = [&](std::size_t i, std::size_t j, SparseVec v) {
    h.alg.mul[i * N + j] = std::move(v);
  };
  for (std::size_t i = 0; i < N; ++i) {
    set(0, i, {{i, one}});
    if (i) set(i, 0, {{i, one}});
  }
  set(1, 1, {{3, one}});                       // x*x = w
  set(1, 2, {});                               // x*y = 0
  set(2, 1, {});
  set(2, 2, {{0, xinv}, {3, -xinv}});          // y*y = (1 - w)/xi
  set(1, 3, {{1, one}});                       // x*w = x
  set(3, 1, {{1, one}});
  set(2, 3, {});                               // y*w = 0
  set(3, 2, {});
  set(3, 3, {{3, one}});                       // w*w = w
  if (auto bad = check_algebra_axioms(h.alg))
    throw Error(errc::consistency_failure, "circle algebra: " + *bad);

  Tensor2 dx, dy;
  dx.emplace(1 * N + 1, one);      // x (x) x
  dx.emplace(2 * N + 2, -xi);      // - xi y (x) y
  dy.emplace(1 * N + 2, one);      // x (x) y
  dy.emplace(2 * N + 1, one);      // y (x) x
  Tensor2 dw = tensor2_product(h.alg, dx, dx);
  h.comul.assign(N, {});
  h.comul[0].push_back(CoprodTerm{0, 0, one});
  for (const auto& [k, c] : dx) h.comul[1].push_back(CoprodTerm{k / N, k % N, c});
  for (const auto& [k, c] : dy) h.comul[2].push_back(CoprodTerm{k / N, k % N, c});
  for (const auto& [k, c] : dw) h.comul[3].push_back(CoprodTerm{k / N, k % N, c});
  h.counit = {one, one, zero, one};
  h.antipode = Matrix(f, N, N);
  h.antipode.at(0, 0) = one;
  h.antipode.at(1, 1) = one;
  h.antipode.at(2, 2) = -one;
  h.antipode.at(3, 3) = one;
  return h;
}

// ---------------------------------------------------------------------------
// family builders

namespace {

std::string power_name(const std::string& g, long e) {
  if (e == 0) return "";
  if (e == 1) return g;
  return g + "^" + std::to_string(e);
}

std::string join_powers(std::initializer_list<std::pair<const char*, long>> ps) {
  std::string out;
  for (const auto& [g, e] : ps) {
    std::string part = power_name(g, e);
    if (part.empty()) continue;
    if (!out.empty()) out += "*";
    out += part;
  }
  return out.empty() ? "1" : out;
}

std::shared_ptr<PresentedHopfFamily> cyclic_group_family(const FieldPtr& f,
                                                         unsigned long n) {
  auto fam = std::make_shared<PresentedHopfFamily>();
  fam->name = "cyclic" + std::to_string(n);
  fam->field = f;
  fam->gen_names = {"g"};
  fam->normal_form = [f, n](const Word& w) {
    Monomial m = {(long)(w.size() % n)};
    return LinComb{{std::move(m), Scalar::one(f)}};
  };
  fam->monomial_word = [](const Monomial& m) {
    return Word((std::size_t)m[0], 0);
  };
  fam->monomial_name = [](const Monomial& m) {
    return join_powers({{"g", m[0]}});
  };
  fam->relators = {{WTerm{Scalar::one(f), reps(0, n)},
                    WTerm{-Scalar::one(f), Word{}}}};
  GenHopf hg;
  hg.delta = {TensorTerm{Scalar::one(f), {0}, {0}}};
  hg.counit = Scalar::one(f);
  hg.antipode = one_word(f, reps(0, n - 1));
  fam->hopf = {hg};
  fam->terminal = cyclic_group_algebra(f, n);
  fam->terminal_projection = {unit_vec(f, n, n == 1 ? 0 : 1)};
  return fam;
}

std::shared_ptr<PresentedHopfFamily> trivial_family(const FieldPtr& f) {
  auto fam = std::make_shared<PresentedHopfFamily>();
  fam->name = "point";
  fam->field = f;
  fam->normal_form = [f](const Word& w) {
    if (!w.empty()) throw Error(errc::invalid_params, "no generators");
    return LinComb{{Monomial{}, Scalar::one(f)}};
  };
  fam->monomial_word = [](const Monomial&) { return Word{}; };
  fam->monomial_name = [](const Monomial&) { return std::string("1"); };
  fam->terminal = trivial_hopf(f);
  return fam;
}

} // namespace

std::shared_ptr<const PresentedHopfFamily> taft_family(const FieldPtr& f,
                                                       unsigned long n,
                                                       unsigned long m,
                                                       unsigned long t) {
  Scalar xi = primitive_root_of_unity(f, n);
  auto fam = std::make_shared<PresentedHopfFamily>();
  fam->name = "taft_family(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
              ",t=" + std::to_string(t) + ")";
  fam->field = f;
  fam->gen_names = {"g", "x"};
  // basis g^a x^b, 0 <= a < n, b >= 0; rule x g = xi^m g x
  fam->normal_form = [f, n, m, xi](const Word& w) {
    long a = 0, b = 0;
    Scalar c = Scalar::one(f);
    for (std::size_t sym : w) {
      if (sym == 0) { // append g: x^b g = xi^{m b} g x^b
        c = c * xi.pow((long)m * b);
        a = (a + 1) % (long)n;
      } else {
        b += 1;
      }
    }
    if (c.is_zero()) return LinComb{};
    return LinComb{{Monomial{a, b}, c}};
  };
  fam->monomial_word = [](const Monomial& m2) {
    Word w((std::size_t)m2[0], 0);
    w.insert(w.end(), (std::size_t)m2[1], 1);
    return w;
  };
  fam->monomial_name = [](const Monomial& m2) {
    return join_powers({{"g", m2[0]}, {"x", m2[1]}});
  };
  fam->relators = {
      {WTerm{Scalar::one(f), reps(0, n)}, WTerm{-Scalar::one(f), Word{}}},
      {WTerm{Scalar::one(f), Word{1, 0}},
       WTerm{-xi.pow((long)m), Word{0, 1}}}};
  GenHopf hg, hx;
  hg.delta = {TensorTerm{Scalar::one(f), {0}, {0}}};
  hg.counit = Scalar::one(f);
  hg.antipode = one_word(f, reps(0, n - 1));
  hx.delta = {TensorTerm{Scalar::one(f), {1}, {}},
              TensorTerm{Scalar::one(f), reps(0, t % n), {1}}};
  hx.counit = Scalar::zero(f);
  {
    Word sw = reps(0, (n - (t % n)) % n);
    sw.push_back(1);
    hx.antipode = {WTerm{-Scalar::one(f), std::move(sw)}};
  }
  fam->hopf = {hg, hx};

  ReductionStep st;
  st.normal_element = one_word(f, {1});
  st.twist = {{WTerm{xi.pow((long)m), {0}}}, one_word(f, {1})};
  st.twist_inverse = {{WTerm{xi.pow(-(long)m), {0}}}, one_word(f, {1})};
  st.hopf_ideal_witness = {
      WitnessTerm{Scalar::one(f), true, {}, {}, {}},
      WitnessTerm{Scalar::one(f), false, {}, {}, reps(0, t % n)}};
  st.projection = {one_word(f, {0}), {}}; // g -> g, x -> 0
  fam->step = std::move(st);
  fam->next = cyclic_group_family(f, n);

  TruncationSpec tr;
  tr.basis = [n](unsigned long s) {
    std::vector<Monomial> b;
    for (unsigned long a = 0; a < n; ++a)
      for (unsigned long j = 0; j < s; ++j) b.push_back(Monomial{(long)a, (long)j});
    return b;
  };
  tr.in_basis = [](const Monomial& m2, unsigned long s) {
    return m2[1] < (long)s;
  };
  fam->truncation = std::move(tr);
  if (std::gcd(n, m) == 1) fam->pi_degree = n; // prime of PI degree n
  return fam;
}

std::shared_ptr<const PresentedHopfFamily> solvable_enveloping(const FieldPtr& f) {
  auto fam = std::make_shared<PresentedHopfFamily>();
  fam->name = "solvable_enveloping";
  fam->field = f;
  fam->gen_names = {"x", "y"};
  // basis x^i y^j; rule y x = x(y - 1), so appending x uses
  // y^j x = x (y-1)^j = sum_k C(j,k) (-1)^{j-k} x y^k
  fam->normal_form = [f](const Word& w) {
    LinComb acc{{Monomial{0, 0}, Scalar::one(f)}};
    for (std::size_t sym : w) {
      LinComb next;
      for (const auto& [mon, c] : acc) {
        long i = mon[0], j = mon[1];
        if (sym == 1) {
          Monomial m2{i, j + 1};
          auto it = next.find(m2);
          if (it == next.end()) next.emplace(std::move(m2), c);
          else it->second = it->second + c;
        } else {
          for (long k = 0; k <= j; ++k) {
            mpz_class b = binom_z((unsigned long)j, (unsigned long)k);
            if ((j - k) % 2 == 1) b = -b;
            Scalar coeff = c * Scalar::from_mpq(f, mpq_class(b));
            if (coeff.is_zero()) continue;
            Monomial m2{i + 1, k};
            auto it = next.find(m2);
            if (it == next.end()) next.emplace(std::move(m2), coeff);
            else {
              it->second = it->second + coeff;
              if (it->second.is_zero()) next.erase(it);
            }
          }
        }
      }
      acc = std::move(next);
    }
    return acc;
  };
  fam->monomial_word = [](const Monomial& m2) {
    Word w((std::size_t)m2[0], 0);
    w.insert(w.end(), (std::size_t)m2[1], 1);
    return w;
  };
  fam->monomial_name = [](const Monomial& m2) {
    return join_powers({{"x", m2[0]}, {"y", m2[1]}});
  };
  // x y - y x - x = 0
  fam->relators = {{WTerm{Scalar::one(f), Word{0, 1}},
                    WTerm{-Scalar::one(f), Word{1, 0}},
                    WTerm{-Scalar::one(f), Word{0}}}};
  GenHopf hx, hy;
  hx.delta = {TensorTerm{Scalar::one(f), {0}, {}},
              TensorTerm{Scalar::one(f), {}, {0}}};
  hx.counit = Scalar::zero(f);
  hx.antipode = {WTerm{-Scalar::one(f), {0}}};
  hy.delta = {TensorTerm{Scalar::one(f), {1}, {}},
              TensorTerm{Scalar::one(f), {}, {1}}};
  hy.counit = Scalar::zero(f);
  hy.antipode = {WTerm{-Scalar::one(f), {1}}};
  fam->hopf = {hx, hy};

  // stage 2: k[y] with a central reduction by y
  auto poly = std::make_shared<PresentedHopfFamily>();
  poly->name = "poly_y";
  poly->field = f;
  poly->gen_names = {"y"};
  poly->normal_form = [f](const Word& w) {
    return LinComb{{Monomial{(long)w.size()}, Scalar::one(f)}};
  };
  poly->monomial_word = [](const Monomial& m2) {
    return Word((std::size_t)m2[0], 0);
  };
  poly->monomial_name = [](const Monomial& m2) {
    return join_powers({{"y", m2[0]}});
  };
  GenHopf py;
  py.delta = {TensorTerm{Scalar::one(f), {0}, {}},
              TensorTerm{Scalar::one(f), {}, {0}}};
  py.counit = Scalar::zero(f);
  py.antipode = {WTerm{-Scalar::one(f), {0}}};
  poly->hopf = {py};
  ReductionStep st2;
  st2.normal_element = one_word(f, {0});
  st2.twist = {one_word(f, {0})};
  st2.twist_inverse = {one_word(f, {0})};
  st2.hopf_ideal_witness = {WitnessTerm{Scalar::one(f), true, {}, {}, {}},
                            WitnessTerm{Scalar::one(f), false, {}, {}, {}}};
  st2.projection = {{}}; // y -> 0
  poly->step = std::move(st2);
  poly->next = trivial_family(f);

  ReductionStep st1;
  st1.normal_element = one_word(f, {0}); // w = x
  st1.twist = {one_word(f, {0}),
               {WTerm{Scalar::one(f), {1}}, WTerm{Scalar::one(f), {}}}};
  st1.twist_inverse = {one_word(f, {0}),
                       {WTerm{Scalar::one(f), {1}}, WTerm{-Scalar::one(f), {}}}};
  st1.hopf_ideal_witness = {WitnessTerm{Scalar::one(f), true, {}, {}, {}},
                            WitnessTerm{Scalar::one(f), false, {}, {}, {}}};
  st1.projection = {{}, one_word(f, {0})}; // x -> 0, y -> y
  fam->step = std::move(st1);
  fam->next = poly;
  return fam;
}

std::shared_ptr<const PresentedHopfFamily> laurent_family(const FieldPtr& f) {
  auto fam = std::make_shared<PresentedHopfFamily>();
  fam->name = "laurent";
  fam->field = f;
  fam->gen_names = {"x", "x^-1"};
  fam->normal_form = [f](const Word& w) {
    long i = 0;
    for (std::size_t sym : w) i += sym == 0 ? 1 : -1;
    return LinComb{{Monomial{i}, Scalar::one(f)}};
  };
  fam->monomial_word = [](const Monomial& m2) {
    return m2[0] >= 0 ? Word((std::size_t)m2[0], 0)
                      : Word((std::size_t)(-m2[0]), 1);
  };
  fam->monomial_name = [](const Monomial& m2) {
    return join_powers({{"x", m2[0]}});
  };
  fam->relators = {{WTerm{Scalar::one(f), Word{0, 1}}, WTerm{-Scalar::one(f), Word{}}},
                   {WTerm{Scalar::one(f), Word{1, 0}}, WTerm{-Scalar::one(f), Word{}}}};
  GenHopf hx, hX;
  hx.delta = {TensorTerm{Scalar::one(f), {0}, {0}}};
  hx.counit = Scalar::one(f);
  hx.antipode = one_word(f, {1});
  hX.delta = {TensorTerm{Scalar::one(f), {1}, {1}}};
  hX.counit = Scalar::one(f);
  hX.antipode = one_word(f, {0});
  fam->hopf = {hx, hX};

  ReductionStep st;
  st.normal_element = {WTerm{Scalar::one(f), {0}}, WTerm{-Scalar::one(f), {}}};
  st.twist = {one_word(f, {0}), one_word(f, {1})};
  st.twist_inverse = {one_word(f, {0}), one_word(f, {1})};
  // Delta(x-1) = (x-1) (x) x + 1 (x) (x-1)
  st.hopf_ideal_witness = {WitnessTerm{Scalar::one(f), true, {}, {}, {0}},
                           WitnessTerm{Scalar::one(f), false, {}, {}, {}}};
  st.projection = {one_word(f, {}), one_word(f, {})}; // x, x^-1 -> 1
  fam->step = std::move(st);
  fam->next = trivial_family(f);
  fam->pi_degree = 1; // commutative
  return fam;
}

std::shared_ptr<const PresentedHopfFamily> infinite_dihedral_family(
    const FieldPtr& f) {
  auto fam = std::make_shared<PresentedHopfFamily>();
  fam->name = "infinite_dihedral";
  fam->field = f;
  fam->gen_names = {"g", "x", "x^-1"};
  // basis g^a x^i, a in {0,1}, i in Z; x^i g = g x^{-i}
  fam->normal_form = [f](const Word& w) {
    long a = 0, i = 0;
    for (std::size_t sym : w) {
      if (sym == 0) {
        a = (a + 1) % 2;
        i = -i;
      } else if (sym == 1) {
        i += 1;
      } else {
        i -= 1;
      }
    }
    return LinComb{{Monomial{a, i}, Scalar::one(f)}};
  };
  fam->monomial_word = [](const Monomial& m2) {
    Word w((std::size_t)m2[0], 0);
    if (m2[1] >= 0)
      w.insert(w.end(), (std::size_t)m2[1], 1);
    else
      w.insert(w.end(), (std::size_t)(-m2[1]), 2);
    return w;
  };
  fam->monomial_name = [](const Monomial& m2) {
    return join_powers({{"g", m2[0]}, {"x", m2[1]}});
  };
  fam->relators = {
      {WTerm{Scalar::one(f), Word{0, 0}}, WTerm{-Scalar::one(f), Word{}}},
      {WTerm{Scalar::one(f), Word{1, 2}}, WTerm{-Scalar::one(f), Word{}}},
      {WTerm{Scalar::one(f), Word{2, 1}}, WTerm{-Scalar::one(f), Word{}}},
      {WTerm{Scalar::one(f), Word{0, 1, 0}}, WTerm{-Scalar::one(f), Word{2}}}};
  GenHopf hg, hx, hX;
  hg.delta = {TensorTerm{Scalar::one(f), {0}, {0}}};
  hg.counit = Scalar::one(f);
  hg.antipode = one_word(f, {0});
  hx.delta = {TensorTerm{Scalar::one(f), {1}, {1}}};
  hx.counit = Scalar::one(f);
  hx.antipode = one_word(f, {2});
  hX.delta = {TensorTerm{Scalar::one(f), {2}, {2}}};
  hX.counit = Scalar::one(f);
  hX.antipode = one_word(f, {1});
  fam->hopf = {hg, hx, hX};

  ReductionStep st;
  st.normal_element = {WTerm{Scalar::one(f), {1}}, WTerm{-Scalar::one(f), {}}};
  // (x-1) g = (-g x^-1)(x-1)
  st.twist = {{WTerm{-Scalar::one(f), {0, 2}}}, one_word(f, {1}),
              one_word(f, {2})};
  st.twist_inverse = {{WTerm{-Scalar::one(f), {0, 1}}}, one_word(f, {1}),
                      one_word(f, {2})};
  st.hopf_ideal_witness = {WitnessTerm{Scalar::one(f), true, {}, {}, {1}},
                           WitnessTerm{Scalar::one(f), false, {}, {}, {}}};
  st.projection = {one_word(f, {0}), one_word(f, {}), one_word(f, {})};
  fam->step = std::move(st);
  fam->next = cyclic_group_family(f, 2);
  fam->pi_degree = 2;
  return fam;
}

std::shared_ptr<const PresentedHopfFamily> example85_family(const FieldPtr& f) {
  auto fam = std::make_shared<PresentedHopfFamily>();
  fam->name = "example85";
  fam->field = f;
  fam->gen_names = {"g", "x", "x^-1", "y", "y^-1"};
  // basis g^a x^i y^j; g conjugates both x and y to their inverses
  fam->normal_form = [f](const Word& w) {
    long a = 0, i = 0, j = 0;
    for (std::size_t sym : w) {
      switch (sym) {
      case 0: a = (a + 1) % 2; i = -i; j = -j; break;
      case 1: i += 1; break;
      case 2: i -= 1; break;
      case 3: j += 1; break;
      default: j -= 1; break;
      }
    }
    return LinComb{{Monomial{a, i, j}, Scalar::one(f)}};
  };
  fam->monomial_word = [](const Monomial& m2) {
    Word w((std::size_t)m2[0], 0);
    if (m2[1] >= 0) w.insert(w.end(), (std::size_t)m2[1], 1);
    else w.insert(w.end(), (std::size_t)(-m2[1]), 2);
    if (m2[2] >= 0) w.insert(w.end(), (std::size_t)m2[2], 3);
    else w.insert(w.end(), (std::size_t)(-m2[2]), 4);
    return w;
  };
  fam->monomial_name = [](const Monomial& m2) {
    return join_powers({{"g", m2[0]}, {"x", m2[1]}, {"y", m2[2]}});
  };
  auto grouplike = [&](std::size_t s, std::size_t sinv) {
    GenHopf h;
    h.delta = {TensorTerm{Scalar::one(f), {s}, {s}}};
    h.counit = Scalar::one(f);
    h.antipode = one_word(f, {sinv});
    return h;
  };
  fam->hopf = {grouplike(0, 0), grouplike(1, 2), grouplike(2, 1),
               grouplike(3, 4), grouplike(4, 3)};
  fam->relators = {
      {WTerm{Scalar::one(f), Word{0, 0}}, WTerm{-Scalar::one(f), Word{}}},
      {WTerm{Scalar::one(f), Word{1, 2}}, WTerm{-Scalar::one(f), Word{}}},
      {WTerm{Scalar::one(f), Word{2, 1}}, WTerm{-Scalar::one(f), Word{}}},
      {WTerm{Scalar::one(f), Word{3, 4}}, WTerm{-Scalar::one(f), Word{}}},
      {WTerm{Scalar::one(f), Word{4, 3}}, WTerm{-Scalar::one(f), Word{}}},
      {WTerm{Scalar::one(f), Word{0, 1, 0}}, WTerm{-Scalar::one(f), Word{2}}},
      {WTerm{Scalar::one(f), Word{0, 3, 0}}, WTerm{-Scalar::one(f), Word{4}}},
      {WTerm{Scalar::one(f), Word{1, 3}}, WTerm{-Scalar::one(f), Word{3, 1}}}};

  ReductionStep st;
  st.normal_element = {WTerm{Scalar::one(f), {3}}, WTerm{-Scalar::one(f), {}}};
  // (y-1) g = (-g y^-1)(y-1); x and y commute with y-1
  st.twist = {{WTerm{-Scalar::one(f), {0, 4}}}, one_word(f, {1}),
              one_word(f, {2}), one_word(f, {3}), one_word(f, {4})};
  st.twist_inverse = {{WTerm{-Scalar::one(f), {0, 3}}}, one_word(f, {1}),
                      one_word(f, {2}), one_word(f, {3}), one_word(f, {4})};
  st.hopf_ideal_witness = {WitnessTerm{Scalar::one(f), true, {}, {}, {3}},
                           WitnessTerm{Scalar::one(f), false, {}, {}, {}}};
  // kill y; keep g, x
  st.projection = {one_word(f, {0}), one_word(f, {1}), one_word(f, {2}),
                   one_word(f, {}), one_word(f, {})};
  fam->step = std::move(st);
  fam->next = infinite_dihedral_family(f);
  fam->pi_degree = 2; // io = 1 here: the io = PI.deg law needs GK-dim 1
  return fam;
}

// ---------------------------------------------------------------------------
// registry

namespace {

struct ParsedSpec {
  std::string name;
  std::map<std::string, std::string> params;
};

ParsedSpec parse_spec(const std::string& raw) {
  std::string s = raw;
  if (s.rfind("preset:", 0) == 0) s = s.substr(7);
  ParsedSpec out;
  std::size_t open = s.find('(');
  if (open == std::string::npos) {
    out.name = s;
    return out;
  }
  if (s.back() != ')')
    throw Error(errc::invalid_params, "unbalanced parentheses in '" + raw + "'");
  out.name = s.substr(0, open);
  std::string inner = s.substr(open + 1, s.size() - open - 2);
  std::size_t pos = 0;
  while (pos < inner.size()) {
    std::size_t comma = inner.find(',', pos);
    std::string item = inner.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!item.empty()) {
      std::size_t eq = item.find('=');
      if (eq == std::string::npos)
        out.params.emplace("", item); // positional shorthand, e.g. (z3)
      else
        out.params.emplace(item.substr(0, eq), item.substr(eq + 1));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

unsigned long get_ul(const ParsedSpec& ps, const std::string& key,
                     std::optional<unsigned long> dflt = std::nullopt) {
  auto it = ps.params.find(key);
  if (it == ps.params.end()) {
    if (dflt) return *dflt;
    throw Error(errc::invalid_params, "missing parameter '" + key + "'");
  }
  try {
    return std::stoul(it->second);
  } catch (...) {
    throw Error(errc::invalid_params, "bad value for '" + key + "'");
  }
}

GoldenValue gv(std::string key, std::string value, std::string note) {
  return GoldenValue{std::move(key), std::move(value), std::move(note)};
}

} // namespace

FieldPtr parse_field_spec(const std::string& sraw) {
  std::string s;
  for (char c : sraw)
    if (!std::isspace((unsigned char)c)) s += (char)std::tolower((unsigned char)c);
  unsigned long zn = 0;
  std::size_t open = s.find("(z");
  if (open != std::string::npos) {
    if (s.back() != ')') throw Error(errc::parse_error, "bad field spec");
    zn = std::stoul(s.substr(open + 2, s.size() - open - 3));
    s = s.substr(0, open);
  }
  FieldPtr base;
  if (s == "q") {
    base = FieldSpec::rationals();
  } else if (s.rfind("fp:", 0) == 0) {
    base = FieldSpec::prime(std::stoul(s.substr(3)));
  } else {
    throw Error(errc::parse_error, "unknown field spec '" + sraw + "'");
  }
  return zn ? FieldSpec::cyclotomic(base, zn) : base;
}

std::vector<std::string> preset_names() {
  return {"trivial",       "group_algebra", "klein_four",
          "sweedler",      "taft_finite",   "circle",
          "taft_family",   "solvable_enveloping",
          "laurent",       "infinite_dihedral", "example85"};
}

BuiltPreset build_preset(const std::string& spec, FieldPtr field) {
  ParsedSpec ps = parse_spec(spec);
  const std::string& name = ps.name;
  BuiltPreset out;
  FieldPtr q = FieldSpec::rationals();

  auto default_taft_field = [&](unsigned long n) -> FieldPtr {
    if (field) return field;
    if (n <= 2) return q;
    return FieldSpec::cyclotomic(q, n);
  };
  bool default_field = (field == nullptr);

  if (name == "trivial") {
    if (!field) field = q;
    out.descriptor = "preset:trivial";
    out.finite = trivial_hopf(field);
    if (default_field)
      out.golden = {gv("io", "1", "one-dimensional Hopf algebra"),
                    gv("unimodular", "true", "trivial bimodule")};
  } else if (name == "group_algebra") {
    if (!field) field = q;
    unsigned long n = 0;
    auto pos = ps.params.find("");
    if (pos != ps.params.end() && pos->second.size() > 1 && pos->second[0] == 'z')
      n = std::stoul(pos->second.substr(1));
    else
      n = get_ul(ps, "n");
    out.descriptor = "preset:group_algebra(z" + std::to_string(n) + ")";
    out.finite = cyclic_group_algebra(field, n);
    if (default_field)
      out.golden = {gv("io", "1", "group algebras are unimodular"),
                    gv("unimodular", "true", "group sum is a two-sided integral"),
                    gv("semisimple_by_integral", "true",
                       "counit of the group sum is the group order"),
                    gv("dim_integral_quotient", "1", "unimodular case")};
  } else if (name == "klein_four") {
    if (!field) field = q;
    out.descriptor = "preset:klein_four";
    out.finite = klein_four_algebra(field);
    if (default_field)
      out.golden = {gv("io", "1", "group algebras are unimodular"),
                    gv("unimodular", "true", "commutative"),
                    gv("dim_abelianization", "4", "already commutative")};
  } else if (name == "sweedler") {
    if (!field) field = q;
    out.descriptor = "preset:sweedler";
    out.finite = sweedler_algebra(field);
    if (default_field)
      out.golden = {
          gv("dim", "4", "four-dimensional"),
          gv("io", "2", "distinguished character has order 2"),
          gv("unimodular", "false", "left and right integrals differ"),
          gv("epsilon_of_integral", "0", "counit kills x + g*x"),
          gv("radical_dim", "2", "nilpotent ideal spanned by x, g*x"),
          gv("semisimple_by_integral", "false", "zero counit of integral"),
          gv("cond1_holds", "false", "Hom comparison map is not bijective"),
          gv("antipode_order", "4", "S^2 conjugates by the group-like g"),
          gv("dim_integral_quotient", "2", "equals the integral order"),
          gv("dim_abelianization", "2", "commutators span x, g*x directions"),
          gv("dim_coinvariants", "2", "spanned by 1 and x"),
      };
  } else if (name == "taft_finite") {
    unsigned long n = get_ul(ps, "n");
    unsigned long m = get_ul(ps, "m", 1);
    unsigned long t = get_ul(ps, "t", 1);
    field = default_taft_field(n);
    out.descriptor = "preset:taft_finite(n=" + std::to_string(n) +
                     ",m=" + std::to_string(m) + ",t=" + std::to_string(t) + ")";
    out.finite = taft_finite(field, n, m, t);
    if (default_field && m == 1 && t == 1)
      out.golden = {
          gv("dim", std::to_string(n * n), "n^2 monomials g^a x^b"),
          gv("io", std::to_string(n), "order of the primitive root"),
          gv("unimodular", n == 1 ? "true" : "false", "closed form"),
          gv("antipode_order", std::to_string(n == 1 ? 1 : 2 * n),
             "twice the order of xi^{mt}"),
          gv("dim_integral_quotient", std::to_string(n),
             "equals the integral order"),
      };
  } else if (name == "circle") {
    if (!field) field = q;
    Scalar xi = Scalar::one(field);
    auto it = ps.params.find("xi");
    if (it != ps.params.end()) xi = Scalar::parse(field, it->second);
    out.descriptor = "preset:circle";
    out.finite = circle_hopf(field, xi);
    if (default_field)
      out.golden = {
          gv("dim", "4", "basis 1, x, y, x^2"),
          gv("io", "1", "commutative, hence unimodular"),
          gv("unimodular", "true", "commutative"),
          gv("epsilon_of_integral", "2", "counit of x + x^2"),
          gv("semisimple_by_integral", "true", "nonzero counit of integral"),
          gv("radical_dim", "0", "separable commutative algebra"),
      };
  } else if (name == "taft_family") {
    unsigned long n = get_ul(ps, "n");
    unsigned long m = get_ul(ps, "m", 1);
    unsigned long t = get_ul(ps, "t", 1);
    field = default_taft_field(n);
    out.descriptor = "preset:taft_family(n=" + std::to_string(n) +
                     ",m=" + std::to_string(m) + ",t=" + std::to_string(t) + ")";
    out.family = taft_family(field, n, m, t);
    if (default_field && m == 1) {
      Scalar xi_inv = primitive_root_of_unity(field, n).inverse();
      out.golden = {
          gv("integral_character.g", xi_inv.to_string(),
             "reduction chain twists the trivial character by tau^{-1}"),
          gv("integral_character.x", Scalar::zero(field).to_string(),
             "x maps to 0 in the quotient"),
          gv("io", std::to_string(n), "order of xi^m"),
          gv("clique_size", std::to_string(n), "orbit of the trivial module"),
      };
    }
  } else if (name == "solvable_enveloping") {
    if (!field) field = q;
    out.descriptor = "preset:solvable_enveloping";
    out.family = solvable_enveloping(field);
    if (default_field)
      out.golden = {
          gv("integral_character.x", "0", "independent recomputation"),
          gv("integral_character.y", "-1", "independent recomputation"),
          gv("io", "none", "character powers shift y by integers"),
      };
  } else if (name == "laurent") {
    if (!field) field = q;
    out.descriptor = "preset:laurent";
    out.family = laurent_family(field);
    if (default_field)
      out.golden = {gv("io", "1", "commutative group algebra"),
                    gv("integral_character.x", "1", "trivial character")};
  } else if (name == "infinite_dihedral") {
    if (!field) field = q;
    out.descriptor = "preset:infinite_dihedral";
    out.family = infinite_dihedral_family(field);
    if (default_field)
      out.golden = {
          gv("sigma_r_character.g", "-1", "independent recomputation"),
          gv("sigma_r_character.x", "1", "independent recomputation"),
          gv("io", "2", "group has abelianization of exponent 2"),
          gv("clique_size", "2", "orbit of the trivial module"),
          gv("dim_integral_quotient", "2", "equals the integral order"),
      };
  } else if (name == "example85") {
    if (!field) field = q;
    out.descriptor = "preset:example85";
    out.family = example85_family(field);
    if (default_field)
      out.golden = {
          gv("integral_character.g", "1", "two-step reduction chain"),
          gv("integral_character.x", "1", "two-step reduction chain"),
          gv("integral_character.y", "1", "two-step reduction chain"),
          gv("io", "1", "unimodular despite being noncommutative"),
      };
  } else {
    throw Error(errc::invalid_params, "unknown preset '" + name + "'");
  }
  return out;
}

std::vector<BuiltPreset> all_finite_presets() {
  std::vector<BuiltPreset> out;
  out.push_back(build_preset("trivial"));
  out.push_back(build_preset("group_algebra(n=2)"));
  out.push_back(build_preset("group_algebra(n=3)"));
  out.push_back(build_preset("group_algebra(n=6)"));
  out.push_back(build_preset("klein_four"));
  out.push_back(build_preset("sweedler"));
  out.push_back(build_preset("taft_finite(n=3)"));
  out.push_back(build_preset("circle"));
  return out;
}

std::vector<BuiltPreset> all_family_presets() {
  std::vector<BuiltPreset> out;
  out.push_back(build_preset("taft_family(n=2)"));
  out.push_back(build_preset("taft_family(n=3)"));
  out.push_back(build_preset("solvable_enveloping"));
  out.push_back(build_preset("laurent"));
  out.push_back(build_preset("infinite_dihedral"));
  out.push_back(build_preset("example85"));
  return out;
}

} // namespace hopfint
