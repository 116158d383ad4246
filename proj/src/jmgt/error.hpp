// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef JMGT_ERROR_HPP
#define JMGT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace jmgt
{

// Every failure the library reports. The names are part of the CLI contract
// (they appear verbatim in error records).
enum class ErrorKind
{
  // configuration / validation
  SyntaxError,
  UnknownKey,
  TypeMismatch,
  NonPositiveCoefficient,
  StabilityViolation,
  MeasureAssumptionViolation,
  BadGrid,
  UnknownCase,
  InvalidArgument,
  // numerics
  UndersampledTime,
  SingularMeanMode,
  SingularOperator,
  SolveFailure,
  NonConvergedIteration,
  NonContraction,
  DegeneracyDetected,
  MaxIterExceeded,
  ContractionLost,
  NoPeriodicAttractor,
  StepRejected,
  // plumbing
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// True for errors that reject the input before any solve is attempted.
bool is_validation_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
  {
  }

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace jmgt

#endif  // JMGT_ERROR_HPP
