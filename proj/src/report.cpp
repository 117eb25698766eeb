#include "hopfint/report.hpp"

#include <numeric>
#include <sstream>

#include "hopfint/quotients.hpp"

namespace hopfint {

namespace {

json field_to_json(const FieldPtr& f) {
  json out;
  switch (f->kind()) {
  case field_kind::rational:
    out["kind"] = "rational";
    break;
  case field_kind::prime:
    out["kind"] = "prime";
    out["p"] = f->characteristic();
    break;
  case field_kind::cyclotomic:
    out["kind"] = "cyclotomic";
    out["base"] = f->characteristic() == 0
                      ? json{{"kind", "rational"}}
                      : json{{"kind", "prime"}, {"p", f->characteristic()}};
    out["n"] = f->cyclotomic_order();
    break;
  }
  return out;
}

FieldPtr field_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return FieldSpec::rationals();
  if (kind == "prime") return FieldSpec::prime(j.at("p").get<unsigned long>());
  if (kind == "cyclotomic") {
    FieldPtr base = field_from_json(j.at("base"));
    return FieldSpec::cyclotomic(base, j.at("n").get<unsigned long>());
  }
  throw Error(errc::parse_error, "unknown field kind '" + kind + "'");
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

json character_to_json(const std::vector<std::string>& labels, const Vec& v) {
  json out = json::object();
  for (std::size_t i = 0; i < v.size(); ++i) out[labels[i]] = v[i].to_string();
  return out;
}

json axioms_to_json(const AxiomReport& rep) {
  json out;
  out["passed"] = rep.all_passed();
  json fails = json::array();
  for (const auto& item : rep.items)
    if (!item.passed)
      fails.push_back(json{{"axiom", item.name}, {"witness", item.witness}});
  out["failures"] = fails;
  return out;
}

json golden_to_json(const std::vector<GoldenValue>& golden,
                    const std::map<std::string, std::string>& actual) {
  json out = json::array();
  for (const auto& g : golden) {
    auto it = actual.find(g.key);
    json row;
    row["key"] = g.key;
    row["expected"] = g.value;
    row["actual"] = it == actual.end() ? "<absent>" : it->second;
    row["match"] = it != actual.end() && it->second == g.value;
    row["note"] = g.note;
    out.push_back(row);
  }
  return out;
}

std::string opt_to_string(const std::optional<unsigned long>& v) {
  return v ? std::to_string(*v) : "none";
}

} // namespace

std::string vec_to_expr(const std::vector<std::string>& labels, const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (v[i].is_one())
      out += labels[i];
    else
      out += "(" + v[i].to_string() + ")*" + labels[i];
  }
  return out.empty() ? "0" : out;
}

json report_finite(const FiniteHopfAlgebra& h, const std::string& descriptor,
                   const std::vector<GoldenValue>& golden,
                   unsigned long order_cap) {
  json doc;
  std::map<std::string, std::string> actual;
  doc["input"] = descriptor;
  doc["kind"] = "finite";
  doc["field"] = h.field()->to_string();
  doc["dim"] = h.dim();
  actual["dim"] = std::to_string(h.dim());
  doc["basis"] = h.alg.basis_labels;
  AxiomReport ax = verify_axioms(h);
  doc["axioms"] = axioms_to_json(ax);
  if (!ax.all_passed()) {
    doc["golden"] = golden_to_json(golden, actual);
    return doc;
  }

  IntegralData ints = compute_integrals(h);
  json jint;
  jint["left"] = vec_to_json(ints.left_integral);
  jint["left_expr"] = vec_to_expr(h.alg.basis_labels, ints.left_integral);
  jint["right"] = vec_to_json(ints.right_integral);
  jint["right_expr"] = vec_to_expr(h.alg.basis_labels, ints.right_integral);
  jint["alpha_left"] = character_to_json(h.alg.basis_labels, ints.alpha_left.values);
  jint["sigma_r"] = character_to_json(h.alg.basis_labels, ints.sigma_r.values);
  doc["integrals"] = jint;

  std::optional<unsigned long> io = integral_order(h, ints, order_cap);
  doc["io"] = io ? json(*io) : json("none");
  actual["io"] = opt_to_string(io);
  bool uni = is_unimodular(h, ints);
  doc["unimodular"] = uni;
  actual["unimodular"] = uni ? "true" : "false";

  MaschkeReport mk = maschke_report(h, ints);
  json jm;
  jm["epsilon_of_integral"] = mk.epsilon_of_integral.to_string();
  jm["semisimple_by_integral"] = mk.semisimple_by_integral;
  jm["radical_dim"] =
      mk.radical_dim ? json(*mk.radical_dim) : json("unsupported");
  jm["cond1_holds"] = mk.cond1_holds;
  doc["maschke"] = jm;
  actual["epsilon_of_integral"] = mk.epsilon_of_integral.to_string();
  actual["semisimple_by_integral"] = mk.semisimple_by_integral ? "true" : "false";
  actual["radical_dim"] =
      mk.radical_dim ? std::to_string(*mk.radical_dim) : "unsupported";
  actual["cond1_holds"] = mk.cond1_holds ? "true" : "false";

  AntipodeReport ar = antipode_report(h, order_cap);
  json ja;
  ja["order"] = ar.order_of_s ? json(*ar.order_of_s) : json("none");
  ja["s_squared_is_id"] = ar.s_squared_is_id;
  doc["antipode"] = ja;
  actual["antipode_order"] = opt_to_string(ar.order_of_s);

  doc["s_twist_identity"] = s_twist_identity_check(h, ints);

  HopfQuotientResult ab = abelianization(h);
  json jab;
  jab["dim"] = ab.quotient.dim();
  jab["commutative"] = is_commutative(ab.quotient.alg);
  doc["abelianization"] = jab;
  actual["dim_abelianization"] = std::to_string(ab.quotient.dim());

  if (io) {
    HopfQuotientResult iq = integral_quotient(h, order_cap);
    json jiq;
    jiq["dim"] = iq.quotient.dim();
    jiq["kernel_dim"] = iq.kernel.dim();
    jiq["commutative"] = is_commutative(iq.quotient.alg);
    doc["integral_quotient"] = jiq;
    actual["dim_integral_quotient"] = std::to_string(iq.quotient.dim());

    Subspace co = coinvariants(h, iq);
    json jco;
    jco["dim"] = co.dim();
    jco["commutative"] = subspace_commutative(h.alg, co);
    json basis = json::array();
    for (std::size_t r = 0; r < co.dim(); ++r)
      basis.push_back(vec_to_expr(h.alg.basis_labels, co.basis.row(r)));
    jco["basis"] = basis;
    doc["coinvariants"] = jco;
    actual["dim_coinvariants"] = std::to_string(co.dim());

    Subspace fx = fixed_subalgebra(h.alg, winding_group(h, order_cap));
    doc["coinvariants"]["equals_winding_fixed_points"] = (co == fx);
  }

  doc["golden"] = golden_to_json(golden, actual);
  return doc;
}

json report_family(const PresentedHopfFamily& f, const std::string& descriptor,
                   const std::vector<GoldenValue>& golden,
                   unsigned long order_cap) {
  json doc;
  std::map<std::string, std::string> actual;
  doc["input"] = descriptor;
  doc["kind"] = "family";
  doc["field"] = f.field->to_string();
  doc["generators"] = f.gen_names;
  ChainReport chain = verify_chain(f);
  json jc;
  jc["verified"] = chain.ok();
  jc["failures"] = chain.failures;
  doc["chain"] = jc;
  if (!chain.ok()) {
    doc["golden"] = golden_to_json(golden, actual);
    return doc;
  }

  FamilyCharacter alpha = integral_character(f);
  FamilyCharacter sigma = sigma_r_character(f, alpha);
  json jal = json::object(), jsr = json::object();
  for (std::size_t i = 0; i < f.arity(); ++i) {
    jal[f.gen_names[i]] = alpha.values[i].to_string();
    jsr[f.gen_names[i]] = sigma.values[i].to_string();
    actual["integral_character." + f.gen_names[i]] = alpha.values[i].to_string();
    actual["sigma_r_character." + f.gen_names[i]] = sigma.values[i].to_string();
  }
  doc["integral_character"] = jal;
  doc["sigma_r_character"] = jsr;

  std::optional<unsigned long> io = family_integral_order(f, order_cap);
  doc["io"] = io ? json(*io) : json("none");
  if (!io) doc["io_note"] = "infinite or beyond cap " + std::to_string(order_cap);
  actual["io"] = opt_to_string(io);

  if (f.pi_degree) {
    doc["pi_degree"] = *f.pi_degree;
    if (io) doc["io_equals_pi_degree"] = (*io == *f.pi_degree);
  }
  if (io) {
    std::vector<FamilyCharacter> orbit = clique_of_trivial(f, order_cap);
    json jcl = json::array();
    for (const auto& chi : orbit) {
      json row = json::object();
      for (std::size_t i = 0; i < f.arity(); ++i)
        row[f.gen_names[i]] = chi.values[i].to_string();
      jcl.push_back(row);
    }
    doc["clique"] = jcl;
    actual["clique_size"] = std::to_string(orbit.size());
    doc["integral_quotient"] = json{{"dim", *io}};
    actual["dim_integral_quotient"] = std::to_string(*io);
  }

  doc["golden"] = golden_to_json(golden, actual);
  return doc;
}

json report_tensor(const FiniteHopfAlgebra& a, const FiniteHopfAlgebra& b,
                   const std::string& descriptor, unsigned long order_cap) {
  FiniteHopfAlgebra t = tensor_hopf(a, b);
  json doc;
  doc["input"] = descriptor;
  doc["kind"] = "tensor";
  doc["field"] = t.field()->to_string();
  doc["dim"] = t.dim();
  IntegralData ia = compute_integrals(a);
  IntegralData ib = compute_integrals(b);
  IntegralData it = compute_integrals(t);
  std::optional<unsigned long> io_a = integral_order(a, ia, order_cap);
  std::optional<unsigned long> io_b = integral_order(b, ib, order_cap);
  std::optional<unsigned long> io_t = integral_order(t, it, order_cap);
  json law;
  law["io_left"] = io_a ? json(*io_a) : json("none");
  law["io_right"] = io_b ? json(*io_b) : json("none");
  law["io_tensor"] = io_t ? json(*io_t) : json("none");
  bool holds = false;
  if (io_a && io_b && io_t)
    holds = *io_t == std::lcm(*io_a, *io_b);
  law["lcm_law_holds"] = holds;
  doc["io_lcm_law"] = law;

  // sigma_r of the tensor = sigma_r (x) sigma_r
  Vec expect = zero_vec(t.field(), t.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      expect[i * b.dim() + j] = ia.sigma_r.values[i] * ib.sigma_r.values[j];
  doc["sigma_r_is_tensor_of_factors"] = (expect == it.sigma_r.values);
  doc["unimodular"] = is_unimodular(t, it);
  return doc;
}

json report_truncation(const PresentedHopfFamily& f, unsigned long s,
                       const std::string& descriptor, unsigned long order_cap) {
  TruncationResult tr = truncate(f, s, order_cap);
  json doc;
  doc["input"] = descriptor;
  doc["kind"] = "truncation";
  doc["field"] = f.field->to_string();
  doc["s"] = s;
  doc["dim"] = tr.algebra.dim;
  doc["basis"] = tr.algebra.basis_labels;

  // radical layer dimensions dim J^t / J^{t+1}
  json layers = json::array();
  if (radical_supported(tr.algebra)) {
    Subspace rad = jacobson_radical(tr.algebra);
    std::vector<std::size_t> dims; // dim J^t, J^0 = algebra
    dims.push_back(tr.algebra.dim);
    Subspace power = rad;
    while (power.dim() > 0) {
      dims.push_back(power.dim());
      power = subspace_product(tr.algebra, power, rad);
      if (dims.size() > tr.algebra.dim + 1)
        throw Error(errc::consistency_failure, "radical is not nilpotent");
    }
    dims.push_back(0);
    for (std::size_t t = 0; t + 1 < dims.size(); ++t)
      layers.push_back(dims[t] - dims[t + 1]);
    doc["radical_dim"] = rad.dim();
  } else {
    doc["radical_dim"] = "unsupported";
  }
  doc["radical_layers"] = layers;

  Subspace fixed = fixed_subalgebra(tr.algebra, tr.windings);
  json jf;
  jf["dim"] = fixed.dim();
  jf["commutative"] = subspace_commutative(tr.algebra, fixed);
  json basis = json::array();
  for (std::size_t r = 0; r < fixed.dim(); ++r)
    basis.push_back(vec_to_expr(tr.algebra.basis_labels, fixed.basis.row(r)));
  jf["basis"] = basis;
  doc["winding_fixed_subalgebra"] = jf;
  return doc;
}

// ---------------------------------------------------------------------------
// JSON input/output of finite Hopf algebras

FiniteHopfAlgebra hopf_from_json(const json& j) {
  FiniteHopfAlgebra h;
  FieldPtr f = field_from_json(j.at("field"));
  std::size_t n = j.at("dim").get<std::size_t>();
  h.alg.field = f;
  h.alg.dim = n;
  if (j.contains("basis"))
    h.alg.basis_labels = j.at("basis").get<std::vector<std::string>>();
  h.alg.unit = zero_vec(f, n);
  {
    const json& ju = j.at("unit");
    if (ju.size() != n) throw Error(errc::parse_error, "unit length != dim");
    for (std::size_t i = 0; i < n; ++i)
      h.alg.unit[i] = Scalar::parse(f, ju[i].get<std::string>());
  }
  h.alg.mul.assign(n * n, SparseVec{});
  {
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> acc(n * n);
    for (const json& row : j.at("mul")) {
      if (row.size() != 4) throw Error(errc::parse_error, "mul triplet arity");
      std::size_t a = row[0].get<std::size_t>(), b = row[1].get<std::size_t>(),
                  k = row[2].get<std::size_t>();
      if (a >= n || b >= n || k >= n)
        throw Error(errc::parse_error, "mul index out of range");
      acc[a * n + b].emplace_back(k, Scalar::parse(f, row[3].get<std::string>()));
    }
    for (std::size_t e = 0; e < n * n; ++e)
      h.alg.mul[e] = canonical_sparse(std::move(acc[e]));
  }
  h.comul.assign(n, {});
  for (const json& row : j.at("comul")) {
    if (row.size() != 4) throw Error(errc::parse_error, "comul triplet arity");
    std::size_t i = row[0].get<std::size_t>(), a = row[1].get<std::size_t>(),
                b = row[2].get<std::size_t>();
    if (i >= n || a >= n || b >= n)
      throw Error(errc::parse_error, "comul index out of range");
    h.comul[i].push_back(
        CoprodTerm{a, b, Scalar::parse(f, row[3].get<std::string>())});
  }
  h.counit = zero_vec(f, n);
  for (const json& row : j.at("counit")) {
    if (row.size() != 2) throw Error(errc::parse_error, "counit pair arity");
    std::size_t i = row[0].get<std::size_t>();
    if (i >= n) throw Error(errc::parse_error, "counit index out of range");
    h.counit[i] = Scalar::parse(f, row[1].get<std::string>());
  }
  h.antipode = Matrix(f, n, n);
  for (const json& row : j.at("antipode")) {
    if (row.size() != 3) throw Error(errc::parse_error, "antipode triplet arity");
    std::size_t r = row[0].get<std::size_t>(), c = row[1].get<std::size_t>();
    if (r >= n || c >= n)
      throw Error(errc::parse_error, "antipode index out of range");
    h.antipode.at(r, c) = Scalar::parse(f, row[2].get<std::string>());
  }
  return h;
}

json hopf_to_json(const FiniteHopfAlgebra& h) {
  json j;
  std::size_t n = h.dim();
  j["field"] = field_to_json(h.field());
  j["dim"] = n;
  j["basis"] = h.alg.basis_labels;
  j["unit"] = vec_to_json(h.alg.unit);
  json mul = json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& [k, c] : h.alg.mul_entry(a, b))
        mul.push_back(json::array({a, b, k, c.to_string()}));
  j["mul"] = mul;
  json comul = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : h.comul[i])
      comul.push_back(json::array({i, t.j, t.k, t.c.to_string()}));
  j["comul"] = comul;
  json counit = json::array();
  for (std::size_t i = 0; i < n; ++i)
    if (!h.counit[i].is_zero())
      counit.push_back(json::array({i, h.counit[i].to_string()}));
  j["counit"] = counit;
  json ant = json::array();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!h.antipode.at(r, c).is_zero())
        ant.push_back(json::array({r, c, h.antipode.at(r, c).to_string()}));
  j["antipode"] = ant;
  return j;
}

// ---------------------------------------------------------------------------

namespace {

void render_value(std::ostringstream& os, const json& v, int indent);

void render_object(std::ostringstream& os, const json& v, int indent) {
  for (const auto& [key, val] : v.items()) {
    os << std::string(indent, ' ') << key << ": ";
    if (val.is_object() || (val.is_array() && !val.empty() &&
                            (val[0].is_object() || val[0].is_array()))) {
      os << "\n";
      render_value(os, val, indent + 2);
    } else {
      render_value(os, val, 0);
      os << "\n";
    }
  }
}

void render_value(std::ostringstream& os, const json& v, int indent) {
  if (v.is_object()) {
    render_object(os, v, indent);
  } else if (v.is_array()) {
    if (!v.empty() && (v[0].is_object() || v[0].is_array())) {
      for (const auto& item : v) {
        os << std::string(indent, ' ') << "-\n";
        render_value(os, item, indent + 2);
      }
    } else {
      os << "[";
      bool first = true;
      for (const auto& item : v) {
        if (!first) os << ", ";
        first = false;
        render_value(os, item, 0);
      }
      os << "]";
      if (indent) os << "\n";
    }
  } else if (v.is_string()) {
    os << v.get<std::string>();
  } else {
    os << v.dump();
  }
}

} // namespace

std::string render_text(const json& doc) {
  std::ostringstream os;
  render_object(os, doc, 0);
  return os.str();
}

} // namespace hopfint
