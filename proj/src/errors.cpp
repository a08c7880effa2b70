#include "slope_lab/errors.hpp"

namespace slope_lab {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptyProfile: return "EmptyProfile";
    case ErrorCode::NotStrictlyIncreasingRanks: return "NotStrictlyIncreasingRanks";
    case ErrorCode::NotStrictlyDecreasingSlopes: return "NotStrictlyDecreasingSlopes";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::ModelMismatch: return "ModelMismatch";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::AmbientTooSmall: return "AmbientTooSmall";
    case ErrorCode::TooFewSections: return "TooFewSections";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::GapOne: return "GapOne";
    case ErrorCode::InvalidCodim: return "InvalidCodim";
    case ErrorCode::NoSections: return "NoSections";
    case ErrorCode::ZeroPushforwardDegree: return "ZeroPushforwardDegree";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::InvalidInvariants: return "InvalidInvariants";
    case ErrorCode::InvalidThreshold: return "InvalidThreshold";
    case ErrorCode::NonIntegralTwist: return "NonIntegralTwist";
    case ErrorCode::TwistTooSmall: return "TwistTooSmall";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::NotNef: return "NotNef";
    case ErrorCode::NonpositiveDegree: return "NonpositiveDegree";
    case ErrorCode::WrongRank: return "WrongRank";
    case ErrorCode::RankRange: return "RankRange";
    case ErrorCode::BranchTooSmall: return "BranchTooSmall";
    case ErrorCode::AssumptionViolated: return "AssumptionViolated";
    case ErrorCode::NotWellFormed: return "NotWellFormed";
    case ErrorCode::ParamRange: return "ParamRange";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(code_name(code)) + ": " + message), code_(code) {}

}  // namespace slope_lab
