#pragma once

#include <stdexcept>
#include <string>

namespace sidon {

// Failure codes shared by the library and the CLI exit-code mapping.
enum class Errc {
  ParseError,
  EmptyCoefficientList,
  ZeroDenominator,
  InvalidArgument,
  ZeroCoefficient,
  EmptySubset,
  ElementAlreadyPresent,
  PreconditionNotSidon,
  PropertyNViolated,
  NotPrime,
  NonPositiveTolerance,
  NonIntegerCoefficients,
  NonIntegerElements,
  StreamExhausted,
  NegativeThreshold,
  FormTooLarge,
  BudgetExceeded,
  CapExceeded,
  InternalError,
};

// Stable machine-readable name ("parse_error", "budget_exceeded", ...),
// used verbatim as the "reason" field of CLI payloads.
const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sidon
