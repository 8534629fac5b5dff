#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace padlog {

enum class ErrorCode {
  NotPrime,
  BaseMismatch,
  NotAUnit,
  InsufficientPrecision,
  IndeterminateValuation,
  ZeroInput,
  NotCoprime,
  ModulusTooLarge,
  WrongResidueClass,
  NotAPrimitiveRoot,
  NotPrincipalUnit,
  DomainError,
  AIsOne,
  Unsolvable,
  NonzeroConstantTerm,
  WrongConstantTerm,
  NotInRange,
  UnknownTable,
  ParseError,
  InvalidArgument,
  InternalInvariant,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it to a stable reason string.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace padlog
