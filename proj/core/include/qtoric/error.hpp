#pragma once

#include <stdexcept>
#include <string>

namespace qtoric {

// Every failure mode carries a code so callers (and tests) can branch on the
// cause without parsing messages.
enum class Errc {
  // exact integer arithmetic
  Overflow,
  ZeroVector,
  NotUnimodularBasis,
  // polytope validation
  NotSimple,
  DuplicateVertex,
  UnusedFacet,
  Disconnected,
  TooFewFacets,
  BadIndex,
  DimensionTooSmall,
  // characteristic pairs
  BadLength,
  NotPrimitive,
  NotNonsingular,
  CutNotNonsingular,
  // constructors / explorer
  BadParameters,
  BudgetExceeded,
  // document I/O
  SyntaxError,
  SchemaError,
  IoError,
  // violated internal contract (a bug, not a user error)
  InternalCheckFailed,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace qtoric
