#ifndef HOPFINT_PRESETS_HPP
#define HOPFINT_PRESETS_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfint/family.hpp"

namespace hopfint {

/// Expected report fields for a preset over its default field, with a short
/// note on where each value comes from.
struct GoldenValue {
  std::string key;
  std::string value;
  std::string note;
};

struct BuiltPreset {
  std::string descriptor; // canonical "preset:name(params)" form
  std::optional<FiniteHopfAlgebra> finite;
  std::shared_ptr<const PresentedHopfFamily> family;
  std::vector<GoldenValue> golden; // attached only for the default field
  bool is_family() const { return family != nullptr; }
};

/// Parse "name(key=value,...)" or "preset:name(...)" and build over `field`
/// (nullptr = the preset's default field). Throws INVALID_PARAMS.
BuiltPreset build_preset(const std::string& spec, FieldPtr field = nullptr);

/// Canonical preset names, for --help and the test matrix.
std::vector<std::string> preset_names();

/// All finite presets over their default fields (property-test matrix).
std::vector<BuiltPreset> all_finite_presets();
/// All family presets over their default fields.
std::vector<BuiltPreset> all_family_presets();

// direct builders (library API)
FiniteHopfAlgebra trivial_hopf(const FieldPtr& f);
FiniteHopfAlgebra group_algebra_from_table(
    const FieldPtr& f, const std::vector<std::string>& labels,
    const std::vector<std::vector<std::size_t>>& table);
FiniteHopfAlgebra cyclic_group_algebra(const FieldPtr& f, unsigned long n);
FiniteHopfAlgebra klein_four_algebra(const FieldPtr& f);
FiniteHopfAlgebra taft_finite(const FieldPtr& f, unsigned long n,
                              unsigned long m = 1, unsigned long t = 1);
FiniteHopfAlgebra sweedler_algebra(const FieldPtr& f);
/// k[x,y]/(x^2 + xi y^2 - 1, xy) with the circle coproduct.
FiniteHopfAlgebra circle_hopf(const FieldPtr& f, const Scalar& xi);

std::shared_ptr<const PresentedHopfFamily> taft_family(
    const FieldPtr& f, unsigned long n, unsigned long m = 1,
    unsigned long t = 1);
std::shared_ptr<const PresentedHopfFamily> solvable_enveloping(const FieldPtr& f);
std::shared_ptr<const PresentedHopfFamily> laurent_family(const FieldPtr& f);
std::shared_ptr<const PresentedHopfFamily> infinite_dihedral_family(
    const FieldPtr& f);
std::shared_ptr<const PresentedHopfFamily> example85_family(const FieldPtr& f);

/// Parse a field spec string: "q", "fp:P", "q(zN)", "fp:P(zN)".
FieldPtr parse_field_spec(const std::string& s);

} // namespace hopfint

#endif
