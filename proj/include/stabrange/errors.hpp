#pragma once

#include <stdexcept>
#include <string>

namespace stabrange {

// Domain error codes. The CLI prints them as one machine-readable line on
// stderr ("error: <code>: <message>") and exits with status 1.
enum class errc {
  pad_too_small,
  invalid_characteristic,
  variable_in_characteristic,
  size_cap_exceeded,
  series_cap_exceeded,
  size_mismatch,
  not_virtual_character,
  not_strictly_increasing,
  zero_degree,
  low_degree_regime,
  invalid_params,
  param_out_of_theorem_range,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::pad_too_small: return "PadTooSmall";
    case errc::invalid_characteristic: return "InvalidCharacteristic";
    case errc::variable_in_characteristic: return "VariableInCharacteristic";
    case errc::size_cap_exceeded: return "SizeCapExceeded";
    case errc::series_cap_exceeded: return "SeriesCapExceeded";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::not_virtual_character: return "NotVirtualCharacter";
    case errc::not_strictly_increasing: return "NotStrictlyIncreasing";
    case errc::zero_degree: return "ZeroDegree";
    case errc::low_degree_regime: return "LowDegreeRegime";
    case errc::invalid_params: return "InvalidParams";
    case errc::param_out_of_theorem_range: return "ParamOutOfTheoremRange";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace stabrange
