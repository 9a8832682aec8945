#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace humbert {

enum class ErrorCode {
  NonAssociative,
  NonCommutative,
  BadUnit,
  BadAlgebraTable,
  NotSymmetric,
  MixedAlgebras,
  DivisionByZero,
  ParseError,
  DimensionMismatch,
  NoSolution,
  UnderdeterminedAfterGauge,
  CentralizerDimensionUnexpected,
  DegreeCapExceeded,
  KTypeNotFound,
  NotInAlgebra,
  WeightNotDominant,
  Singular,
  NotOrthogonalToPsi,
  NotSymplectic,
  BadDiscriminant,
  NumericalRankDeficiency,
  NotInSiegelSpace,
  BoxCapExceeded,
  HeightBoundTooSmall,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the CLI) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace humbert
