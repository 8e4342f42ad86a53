#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grmod {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  UnsupportedField,
  ReducibleModulus,
  NotPrime,
  RingMismatch,
  InhomogeneousInput,
  InternalInconsistency,
  HypothesisViolated,
  PreconditionUnmet,
  PIsShort,
  NotCyclic,
  AllNilpotent,
  FieldEmbeddingFailure,
  NotSubmodule,
  ParseError,
  UnknownCommand,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every engine failure is reported through this exception; `code()` is the
/// stable identifier the CLI serializes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

}  // namespace grmod
