#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liken {

enum class ErrorCode {
  KindMismatch,
  UndecidedComparison,
  EmptySpec,
  UnknownGeneratorIndex,
  NotAnElement,
  NonUnique,
  IndexOutOfRange,
  NotIncreasing,
  NonPositive,
  MixedKinds,
  EmptyList,
  NotAMember,
  NotCofinite,
  NoGaps,
  LengthMismatch,
  EmptyConvexityWindow,
  ValueCollision,
  PolicyExhausted,
  InvalidUserValue,
  InternalConsistency,
  Parse,
  InvalidArgument,
};

/// Stable machine-readable name, e.g. "NotIncreasing".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  /// Position the error refers to (1-based list position, step or element index),
  /// when the error carries one.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace liken
