#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pushpull {

enum class ErrorCode {
  InvalidCartanType,
  LatticeNotContainingRoots,
  GroupTooLarge,
  FGLAxiomViolation,
  NonzeroConstantTerm,
  PrecisionLoss,
  DivisionFailed,
  NotDivisible,
  NotAUnit,
  NotInDemazureAlgebra,
  RelationFailed,
  DenominatorNotCleared,
  ClosureBudgetExceeded,
  SplitBudgetExceeded,
  CacheCorrupt,
  Overflow,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// All library failures are reported through this exception type; the code
/// is what the command-line front end maps onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pushpull
