#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qjacobi {

enum class errc {
  invalid_parameter,
  degenerate_parameters,
  unresolved_relation,
  convergence_failure,
  bracket_failure,
  oracle_failure,
  length_mismatch,
  unsupported_shift,
};

constexpr std::string_view to_string(errc code) {
  switch (code) {
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::degenerate_parameters: return "DegenerateParameters";
    case errc::unresolved_relation: return "UnresolvedRelation";
    case errc::convergence_failure: return "ConvergenceFailure";
    case errc::bracket_failure: return "BracketFailure";
    case errc::oracle_failure: return "OracleFailure";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::unsupported_shift: return "UnsupportedShift";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace qjacobi
