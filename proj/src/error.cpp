#include "liken/error.hpp"

namespace liken {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::UndecidedComparison: return "UndecidedComparison";
    case ErrorCode::EmptySpec: return "EmptySpec";
    case ErrorCode::UnknownGeneratorIndex: return "UnknownGeneratorIndex";
    case ErrorCode::NotAnElement: return "NotAnElement";
    case ErrorCode::NonUnique: return "NonUnique";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotIncreasing: return "NotIncreasing";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::MixedKinds: return "MixedKinds";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::NotCofinite: return "NotCofinite";
    case ErrorCode::NoGaps: return "NoGaps";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EmptyConvexityWindow: return "EmptyConvexityWindow";
    case ErrorCode::ValueCollision: return "ValueCollision";
    case ErrorCode::PolicyExhausted: return "PolicyExhausted";
    case ErrorCode::InvalidUserValue: return "InvalidUserValue";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> index)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      index_(index) {}

}  // namespace liken
