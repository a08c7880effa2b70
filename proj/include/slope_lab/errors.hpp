#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slope_lab {

enum class ErrorCode {
  ParseError,
  Overflow,
  InvalidWeights,
  CapExceeded,
  DegreeTooLarge,
  IndexOutOfRange,
  EmptyProfile,
  NotStrictlyIncreasingRanks,
  NotStrictlyDecreasingSlopes,
  InvalidModel,
  ModelMismatch,
  InvalidSequence,
  TooShort,
  AmbientTooSmall,
  TooFewSections,
  DimensionTooSmall,
  GapOne,
  InvalidCodim,
  NoSections,
  ZeroPushforwardDegree,
  HypothesisNotMet,
  InvalidInvariants,
  InvalidThreshold,
  NonIntegralTwist,
  TwistTooSmall,
  DegenerateDenominator,
  NotNef,
  NonpositiveDegree,
  WrongRank,
  RankRange,
  BranchTooSmall,
  AssumptionViolated,
  NotWellFormed,
  ParamRange,
  UnknownIdentifier,
};

std::string_view code_name(ErrorCode code);

/// Every library failure is reported as an Error carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace slope_lab
