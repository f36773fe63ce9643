#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace carmichael {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  FieldMismatch,
  BothZero,
  CapExceeded,
  ZeroOrConstant,
  NotSquarefree,
  NotCoprime,
  ExhaustedSearchSpace,
  OutOfRange,
  NotPrimePower,
  NotComposite,
  InvalidSeed,
  DegreeBudgetExceeded,
  NotEnoughIrreducibles,
  EllDoesNotDivide,
  NotIrreducible,
  RamifiedPrime,
  NotCoprimeToQ,
  NoWitnessBelowCap,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Domain error raised by every library operation. The kind is stable and is
// what the CLI reports; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace carmichael
