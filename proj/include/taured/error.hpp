#pragma once

#include <stdexcept>
#include <string>

namespace taured {

enum class ErrorKind {
  NotFiniteDimensional,
  UnknownVertex,
  UnknownArrow,
  InvalidQuiver,
  InvalidRelation,
  UnsupportedQuotient,
  EmptySupport,
  AlgebraMismatch,
  QuotientMismatch,
  InvalidRepresentation,
  ZeroModule,
  NotStringAlgebra,
  CapExceeded,
  IncompleteInventory,
  NoProjInjective,
  NotProjInjective,
  NonSimpleSocle,
  BadIndex,
  NonIntegerResult,
  BudgetExceeded,
  Parse,
};

const char* to_string(ErrorKind kind);

/// The single exception type of the library; `kind()` names the failure.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace taured
