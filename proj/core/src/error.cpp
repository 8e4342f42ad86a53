#include "grmod/error.hpp"

namespace grmod {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::InhomogeneousInput: return "InhomogeneousInput";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::PIsShort: return "PIsShort";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::AllNilpotent: return "AllNilpotent";
    case ErrorCode::FieldEmbeddingFailure: return "FieldEmbeddingFailure";
    case ErrorCode::NotSubmodule: return "NotSubmodule";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace grmod
