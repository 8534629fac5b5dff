#include "padlog/error.hpp"

namespace padlog {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::IndeterminateValuation: return "IndeterminateValuation";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::ModulusTooLarge: return "ModulusTooLarge";
    case ErrorCode::WrongResidueClass: return "WrongResidueClass";
    case ErrorCode::NotAPrimitiveRoot: return "NotAPrimitiveRoot";
    case ErrorCode::NotPrincipalUnit: return "NotPrincipalUnit";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::AIsOne: return "AIsOne";
    case ErrorCode::Unsolvable: return "Unsolvable";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::WrongConstantTerm: return "WrongConstantTerm";
    case ErrorCode::NotInRange: return "NotInRange";
    case ErrorCode::UnknownTable: return "UnknownTable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace padlog
