// Batch calculator for integral-theoretic invariants of Hopf algebras given
// by structure constants or as named presets. See README for the JSON schema
// and the preset grammar.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hopfint/report.hpp"

using namespace hopfint;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitAxioms = 2;
constexpr int kExitUnsupported = 3;

struct LoadedInput {
  BuiltPreset preset; // finite or family
};

LoadedInput load_input(const std::string& arg, const std::string& field_spec) {
  FieldPtr field;
  if (!field_spec.empty()) field = parse_field_spec(field_spec);
  if (arg.rfind("preset:", 0) == 0) {
    LoadedInput in;
    in.preset = build_preset(arg, field);
    return in;
  }
  std::ifstream is(arg);
  if (!is)
    throw Error(errc::parse_error, "cannot open input file '" + arg + "'");
  json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    throw Error(errc::parse_error, "JSON syntax error in '" + arg + "': " + e.what());
  }
  LoadedInput in;
  in.preset.descriptor = arg;
  in.preset.finite = hopf_from_json(j);
  return in;
}

void emit(const json& doc, bool as_json) {
  if (as_json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << render_text(doc);
}

int cmd_verify(const std::string& input, const std::string& field_spec,
               bool as_json) {
  LoadedInput in = load_input(input, field_spec);
  json doc;
  doc["input"] = in.preset.descriptor;
  bool ok = false;
  if (in.preset.is_family()) {
    ChainReport rep = verify_chain(*in.preset.family);
    doc["kind"] = "family";
    doc["verified"] = rep.ok();
    doc["failures"] = rep.failures;
    ok = rep.ok();
  } else {
    AxiomReport rep = verify_axioms(*in.preset.finite);
    doc["kind"] = "finite";
    doc["verified"] = rep.all_passed();
    json fails = json::array();
    for (const auto& item : rep.items)
      if (!item.passed)
        fails.push_back(json{{"axiom", item.name}, {"witness", item.witness}});
    doc["failures"] = fails;
    ok = rep.all_passed();
  }
  emit(doc, as_json);
  return ok ? kExitOk : kExitAxioms;
}

int cmd_report(const std::string& input, const std::string& field_spec,
               bool as_json, unsigned long cap) {
  LoadedInput in = load_input(input, field_spec);
  json doc;
  if (in.preset.is_family())
    doc = report_family(*in.preset.family, in.preset.descriptor,
                        in.preset.golden, cap);
  else
    doc = report_finite(*in.preset.finite, in.preset.descriptor,
                        in.preset.golden, cap);
  emit(doc, as_json);
  if (doc.contains("axioms") && !doc["axioms"]["passed"].get<bool>())
    return kExitAxioms;
  if (doc.contains("chain") && !doc["chain"]["verified"].get<bool>())
    return kExitAxioms;
  return kExitOk;
}

int cmd_tensor(const std::string& a, const std::string& b,
               const std::string& field_spec, bool as_json, unsigned long cap) {
  LoadedInput la = load_input(a, field_spec);
  LoadedInput lb = load_input(b, field_spec);
  if (la.preset.is_family() || lb.preset.is_family())
    throw Error(errc::unsupported_operation,
                "tensor needs finite-dimensional inputs");
  json doc = report_tensor(*la.preset.finite, *lb.preset.finite,
                           la.preset.descriptor + " (x) " + lb.preset.descriptor,
                           cap);
  emit(doc, as_json);
  return kExitOk;
}

int cmd_truncate(const std::string& input, unsigned long s,
                 const std::string& field_spec, bool as_json,
                 unsigned long cap) {
  LoadedInput in = load_input(input, field_spec);
  if (!in.preset.is_family())
    throw Error(errc::unsupported_operation, "truncate needs a family preset");
  json doc = report_truncation(*in.preset.family, s,
                               in.preset.descriptor + " / J^" + std::to_string(s),
                               cap);
  emit(doc, as_json);
  return kExitOk;
}

int cmd_export(const std::string& input, const std::string& field_spec) {
  LoadedInput in = load_input(input, field_spec);
  if (in.preset.is_family())
    throw Error(errc::invalid_params, "export needs a finite-dimensional input");
  std::cout << hopf_to_json(*in.preset.finite).dump(2) << "\n";
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of Hopf algebras: integrals, distinguished "
               "characters, integral order, quotients, Maschke tests"};
  app.require_subcommand(1);

  std::string input, second, field_spec;
  bool as_json = false;
  unsigned long cap = 10000, trunc_s = 1;

  auto add_common = [&](CLI::App* sub, bool two_inputs = false) {
    sub->add_option("input", input, two_inputs ? "left input" : "input")
        ->required();
    if (two_inputs) sub->add_option("second", second, "right input")->required();
    sub->add_flag("--json", as_json, "machine-readable output");
    sub->add_option("--field", field_spec,
                    "field override for presets: q, fp:P, q(zN), fp:P(zN)");
    sub->add_option("--order-cap", cap, "cap for order searches");
  };

  CLI::App* verify = app.add_subcommand("verify", "check all Hopf axioms / chain identities");
  add_common(verify);
  CLI::App* report = app.add_subcommand("report", "full invariant report");
  add_common(report);
  CLI::App* tensor = app.add_subcommand("tensor", "tensor product report with the lcm law");
  add_common(tensor, true);
  CLI::App* trunc = app.add_subcommand("truncate", "finite truncation H/J^s report");
  trunc->add_option("input", input, "family preset")->required();
  trunc->add_option("s", trunc_s, "truncation exponent")->required();
  trunc->add_flag("--json", as_json, "machine-readable output");
  trunc->add_option("--field", field_spec, "field override for presets");
  trunc->add_option("--order-cap", cap, "cap for order searches");
  CLI::App* exp = app.add_subcommand("export", "emit a finite input in the JSON schema");
  exp->add_option("input", input, "preset or file")->required();
  exp->add_option("--field", field_spec, "field override for presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (app.got_subcommand(verify)) return cmd_verify(input, field_spec, as_json);
    if (app.got_subcommand(report)) return cmd_report(input, field_spec, as_json, cap);
    if (app.got_subcommand(tensor))
      return cmd_tensor(input, second, field_spec, as_json, cap);
    if (app.got_subcommand(trunc))
      return cmd_truncate(input, trunc_s, field_spec, as_json, cap);
    if (app.got_subcommand(exp)) return cmd_export(input, field_spec);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == errc::unsupported_operation ? kExitUnsupported
                                                   : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
