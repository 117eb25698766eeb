#ifndef HOPFINT_ERROR_HPP
#define HOPFINT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hopfint {

enum class errc {
  field_mismatch,
  division_by_zero,
  root_unavailable,
  ambient_mismatch,
  not_invertible,
  dim_mismatch,
  improper_ideal,
  unsupported_characteristic,
  not_automorphism,
  integral_dim_not_one,
  consistency_failure,
  not_a_character,
  order_infinite,
  not_hopf_ideal,
  relator_violation,
  truncation_undeclared,
  invalid_params,
  incompatible_extension,
  parse_error,
  unsupported_operation,
};

const char* errc_name(errc c);

/// Library-wide exception. `code()` is stable and test-visible; the message
/// carries context (offending index, generator name, ...).
class Error : public std::runtime_error {
public:
  Error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  errc code() const { return code_; }

private:
  errc code_;
};

} // namespace hopfint

#endif
