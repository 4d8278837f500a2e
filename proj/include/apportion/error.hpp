#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace apportion {

enum class ErrorCode {
  EmptyInput,
  ZeroTotalVotes,
  NonPositiveSeats,
  DuplicateName,
  LengthMismatch,
  QuotaSumMismatch,
  MalformedDecimal,
  TieUnderErrorPolicy,
  TooManyPartiesForAdamsLike,
  RhoOutOfRange,
  InsufficientSeats,
  NotMinimal,
  InvalidPartition,
  InstanceTooLarge,
  UnknownMethod,
  ParseError,
  IoError,
  FormatError,
  ScenarioMismatch,
};

std::string_view to_string(ErrorCode code);

// Every recoverable failure in the library is reported through this type.
// The message names the offending field or carries the full diagnostic.
class ApportionError : public std::runtime_error {
 public:
  ApportionError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace apportion
