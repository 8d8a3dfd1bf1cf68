#pragma once

#include <stdexcept>
#include <string>

namespace envelope {

enum class ErrorCode {
  InvalidArgument,
  MalformedInput,
  NotAssociative,
  NoIdentity,
  MissingInverse,
  OrderCapExceeded,
  MalformedCycleNotation,
  IndexNotSuccessor,
  OrdinalOutOfRange,
  NotYetStable,
  ArityMismatch,
  IndexOutOfRange,
  UnknownCatalogName,
  Io,
  Config,
  Internal,
};

const char* to_string(ErrorCode code);

/// All failures raised by the library carry one of the codes above so the
/// C layer can map them onto stable status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace envelope
