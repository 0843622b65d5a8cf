#pragma once

#include <stdexcept>
#include <string>

namespace flagcurv {

// Error taxonomy. `kind` is stable and used by the CLI to map to exit codes:
// input-shaped errors -> 2, verification/engine errors -> 1.
enum class ErrorKind {
  DivisionByZero,
  UnknownSymbol,
  NonTerminatingReduction,
  BadRelation,
  FrameMismatch,
  DegreeMismatch,
  ShapeViolation,
  NotAPseudoFlag,
  DegenerateContact,
  JacobiViolation,
  CrossCheckMismatch,
  NonInvertible,
  IllFormedInvolution,
  NotSupported,
  ParseError,
  UndeclaredName,
  DuplicateDeclaration,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

const char* error_kind_name(ErrorKind kind);

}  // namespace flagcurv
