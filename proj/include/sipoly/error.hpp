#pragma once

#include <stdexcept>
#include <string>

namespace sipoly {

enum class ErrorKind {
  AsymmetricIncidence,
  EmptyRotation,
  InvalidInput,
  Disconnected,
  NonPlanar,
  NotSimple,
  NotGenusZero,
  NotThreeConnected,
  TooSmall,
  NotReducible,
  InvalidMove,
  ParseError,
  SchemaError,
  UnsupportedFormat,
  BoundMismatch,
};

const char* to_string(ErrorKind kind);

/// Library error; `kind` names the failed gate or the rejected input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sipoly
