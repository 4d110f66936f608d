#pragma once

#include <stdexcept>
#include <string>

namespace tabseq {

enum class ErrorCode {
  IllegalMove,
  BadPairing,
  NotFromEmpty,
  GuardExceeded,
  StartOutsideChamber,
  DimensionMismatch,
  NegativeResult,
  HeightExceedsK,
  PatternViolation,
  InternalCorner,
  NotRowFinal,
  NonIntegerStep,
  NonIntegralCoefficient,
  OrderUnderflow,
  FlavorMismatch,
  NoPowerSeriesRoot,
  BranchAmbiguous,
  SupportOverflow,
  GroupClosureOverflow,
  InvalidArgument,
};

constexpr const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::BadPairing: return "BadPairing";
    case ErrorCode::NotFromEmpty: return "NotFromEmpty";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::StartOutsideChamber: return "StartOutsideChamber";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeResult: return "NegativeResult";
    case ErrorCode::HeightExceedsK: return "HeightExceedsK";
    case ErrorCode::PatternViolation: return "PatternViolation";
    case ErrorCode::InternalCorner: return "InternalCorner";
    case ErrorCode::NotRowFinal: return "NotRowFinal";
    case ErrorCode::NonIntegerStep: return "NonIntegerStep";
    case ErrorCode::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorCode::OrderUnderflow: return "OrderUnderflow";
    case ErrorCode::FlavorMismatch: return "FlavorMismatch";
    case ErrorCode::NoPowerSeriesRoot: return "NoPowerSeriesRoot";
    case ErrorCode::BranchAmbiguous: return "BranchAmbiguous";
    case ErrorCode::SupportOverflow: return "SupportOverflow";
    case ErrorCode::GroupClosureOverflow: return "GroupClosureOverflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tabseq
