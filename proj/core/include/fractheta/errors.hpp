#pragma once

#include <stdexcept>
#include <string>

namespace fractheta {

/// Classifies every failure the library can raise. Validation codes reject
/// bad inputs before any computation; numerical codes signal breakdown inside
/// an otherwise valid computation.
enum class ErrorCode {
  constraint_violation,  ///< scheme parameters outside the admissible set
  degenerate_weight,     ///< leading weight vanishes; implicit stepping impossible
  pole_evaluation,       ///< evaluation point coincides with a pole of the closed form
  singular_system,       ///< dense solve hit a pivot below threshold
  step_singular,         ///< scalar implicit step has a vanishing denominator
  length_mismatch,       ///< sequence lengths disagree with the grid
  invalid_beta,          ///< leading exponent excluded (negative integer)
  malformed_range,       ///< step-size range string not a power-of-two chain
};

[[nodiscard]] constexpr const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::constraint_violation: return "constraint_violation";
    case ErrorCode::degenerate_weight: return "degenerate_weight";
    case ErrorCode::pole_evaluation: return "pole_evaluation";
    case ErrorCode::singular_system: return "singular_system";
    case ErrorCode::step_singular: return "step_singular";
    case ErrorCode::length_mismatch: return "length_mismatch";
    case ErrorCode::invalid_beta: return "invalid_beta";
    case ErrorCode::malformed_range: return "malformed_range";
  }
  return "unknown";
}

/// True for codes that indicate rejected input rather than numerical failure.
[[nodiscard]] constexpr bool is_validation_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::constraint_violation:
    case ErrorCode::degenerate_weight:
    case ErrorCode::length_mismatch:
    case ErrorCode::invalid_beta:
    case ErrorCode::malformed_range:
      return true;
    case ErrorCode::pole_evaluation:
    case ErrorCode::singular_system:
    case ErrorCode::step_singular:
      return false;
  }
  return false;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fractheta
