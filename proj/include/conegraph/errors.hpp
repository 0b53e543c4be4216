#pragma once

#include <stdexcept>
#include <string>

namespace conegraph {

enum class ErrorCode {
  Degenerate,        // input violates the general-position assumption
  AmbiguousSign,     // float-mode value too close to zero to classify
  IdenticalPoints,
  WrongCone,
  Overlap,           // collinear overlapping segments
  DegenerateGeometry,
  NotAnEdge,
  CycleDetected,
  PreconditionUnmet,
  Disconnected,
  UnknownProperty,
  ExhaustedRetries,
  ParseError,
  DuplicatePoint,
  MixedMode,
  Internal,
};

const char* to_string(ErrorCode code);

/// All structured failures carry a code so callers (and the CLI exit-code
/// mapping) can react without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace conegraph
