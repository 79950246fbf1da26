#include "pushpull/error.hpp"

namespace pushpull {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidCartanType: return "InvalidCartanType";
    case ErrorCode::LatticeNotContainingRoots: return "LatticeNotContainingRoots";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::FGLAxiomViolation: return "FGLAxiomViolation";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::PrecisionLoss: return "PrecisionLoss";
    case ErrorCode::DivisionFailed: return "DivisionFailed";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotInDemazureAlgebra: return "NotInDemazureAlgebra";
    case ErrorCode::RelationFailed: return "RelationFailed";
    case ErrorCode::DenominatorNotCleared: return "DenominatorNotCleared";
    case ErrorCode::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case ErrorCode::SplitBudgetExceeded: return "SplitBudgetExceeded";
    case ErrorCode::CacheCorrupt: return "CacheCorrupt";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace pushpull
