#include "uncert/errors.hpp"

namespace uncert {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::NotDensityMatrix: return "NotDensityMatrix";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::InvalidSpin: return "InvalidSpin";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EigenstateNoPerp: return "EigenstateNoPerp";
    case ErrorCode::NullProjection: return "NullProjection";
    case ErrorCode::JointEigenstate: return "JointEigenstate";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::PerpNotOrthogonalToSupport: return "PerpNotOrthogonalToSupport";
    case ErrorCode::StatesCoincide: return "StatesCoincide";
    case ErrorCode::StatesOrthogonal: return "StatesOrthogonal";
    case ErrorCode::RandomPerpFailed: return "RandomPerpFailed";
    case ErrorCode::DegenerateDraw: return "DegenerateDraw";
    case ErrorCode::NoValidPerp: return "NoValidPerp";
    case ErrorCode::NumericalResidual: return "NumericalResidual";
  }
  return "UnknownError";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NotHermitian:
    case ErrorCode::NotNormalized:
    case ErrorCode::NotFinite:
    case ErrorCode::NotDensityMatrix:
    case ErrorCode::NotOrthogonal:
    case ErrorCode::InvalidSpin:
    case ErrorCode::InvalidArgument:
    case ErrorCode::ParseError:
      return true;
    default:
      return false;
  }
}

}  // namespace uncert
