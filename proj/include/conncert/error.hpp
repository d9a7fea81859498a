#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conncert {

enum class ErrorCode {
  EmptyGraph,
  SelfLoop,
  OutOfRange,
  EmptyOrFull,
  FullDeletion,
  BadChar,
  TruncatedBits,
  Disconnected,
  CompleteGraph,
  TooSmall,
  PencilDomain,
  NoConvergence,
  ConstantVector,
  NotACut,
  Domain,
  PreconditionDelta,
  DegreeTooSmall,
  TooLarge,
  UnknownFamily,
  Io,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace conncert
