#pragma once

#include <stdexcept>
#include <string>

namespace uncert {

/// Every failure the library reports. Validation codes mean the input data is
/// malformed; degenerate codes mean the inputs are valid but the requested
/// quantity does not exist for them (eigenstates, null projections, ...).
enum class ErrorCode {
  // validation
  DimensionMismatch,
  NotHermitian,
  NotNormalized,
  NotFinite,
  NotDensityMatrix,
  NotOrthogonal,
  InvalidSpin,
  InvalidArgument,
  ParseError,
  // degenerate input
  EigenstateNoPerp,
  NullProjection,
  JointEigenstate,
  ZeroVariance,
  DegenerateDenominator,
  PerpNotOrthogonalToSupport,
  StatesCoincide,
  StatesOrthogonal,
  RandomPerpFailed,
  DegenerateDraw,
  NoValidPerp,
  // internal
  NumericalResidual,
};

const char* error_code_name(ErrorCode code);

/// True for codes that mean "the inputs were malformed" as opposed to
/// "the inputs are valid but degenerate for this operation".
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace uncert
