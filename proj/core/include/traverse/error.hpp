#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace traverse {

enum class ErrorCode {
  Parse,
  Io,
  InvalidArgument,
  Validation,
  DegenerateScene,
  MatchingAmbiguous,
  BoundaryMismatch,
  Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace traverse
