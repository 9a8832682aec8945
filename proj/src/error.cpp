#include "humbert/error.hpp"

namespace humbert {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::NonCommutative: return "NonCommutative";
    case ErrorCode::BadUnit: return "BadUnit";
    case ErrorCode::BadAlgebraTable: return "BadAlgebraTable";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::MixedAlgebras: return "MixedAlgebras";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::UnderdeterminedAfterGauge: return "UnderdeterminedAfterGauge";
    case ErrorCode::CentralizerDimensionUnexpected: return "CentralizerDimensionUnexpected";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::KTypeNotFound: return "KTypeNotFound";
    case ErrorCode::NotInAlgebra: return "NotInAlgebra";
    case ErrorCode::WeightNotDominant: return "WeightNotDominant";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotOrthogonalToPsi: return "NotOrthogonalToPsi";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::BadDiscriminant: return "BadDiscriminant";
    case ErrorCode::NumericalRankDeficiency: return "NumericalRankDeficiency";
    case ErrorCode::NotInSiegelSpace: return "NotInSiegelSpace";
    case ErrorCode::BoxCapExceeded: return "BoxCapExceeded";
    case ErrorCode::HeightBoundTooSmall: return "HeightBoundTooSmall";
  }
  return "Unknown";
}

}  // namespace humbert
