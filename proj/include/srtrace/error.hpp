#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace srtrace {

enum class ErrorCode {
  EmptyComplex,
  DuplicateLabel,
  MalformedInput,
  FaceNotInComplex,
  InvalidField,
  IndexOutOfRange,
  NotPseudomanifold,
  Disconnected,
  Dim1Unsupported,
  TrivialFactor,
  InvalidDescriptor,
  UnknownBuiltin,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps them onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace srtrace
