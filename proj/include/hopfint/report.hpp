#ifndef HOPFINT_REPORT_HPP
#define HOPFINT_REPORT_HPP

#include <string>

#include <json.hpp>

#include "hopfint/presets.hpp"

namespace hopfint {

using json = nlohmann::ordered_json;

/// Canonical report document for one input: fixed key order, canonical
/// scalar strings; identical inputs produce byte-identical serializations.
json report_finite(const FiniteHopfAlgebra& h, const std::string& descriptor,
                   const std::vector<GoldenValue>& golden,
                   unsigned long order_cap);
json report_family(const PresentedHopfFamily& f, const std::string& descriptor,
                   const std::vector<GoldenValue>& golden,
                   unsigned long order_cap);
/// Tensor report with the lcm-law block.
json report_tensor(const FiniteHopfAlgebra& a, const FiniteHopfAlgebra& b,
                   const std::string& descriptor, unsigned long order_cap);
/// Truncation report: radical layers, winding-fixed subalgebra.
json report_truncation(const PresentedHopfFamily& f, unsigned long s,
                       const std::string& descriptor, unsigned long order_cap);

std::string render_text(const json& doc);

/// JSON input schema (see README): field, dim, basis, unit, mul, comul,
/// counit, antipode as sparse triplets with scalar strings.
FiniteHopfAlgebra hopf_from_json(const json& j);
json hopf_to_json(const FiniteHopfAlgebra& h);

/// Human-readable linear combination of basis labels.
std::string vec_to_expr(const std::vector<std::string>& labels, const Vec& v);

} // namespace hopfint

#endif
