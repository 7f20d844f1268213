// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fdalg {

enum class ErrorKind {
  AmbientMismatch,
  ZeroPolynomial,
  SyntaxError,
  NonComposablePath,
  UnknownSymbol,
  NotAdmissible,
  FieldTooSmall,
  NotTwoSided,
  ImproperIdeal,
  UnitNotContained,
  ParentMismatch,
  AlgebraMismatch,
  UnsupportedField,
  CutoffExceeded,
  NotExact,
  LengthMismatch,
  NotAResolution,
  BudgetExhausted,
  PsiIndeterminate,
  HypothesisFailed,
  WitnessIncomplete,
  NotNakayama,
  InvalidArgument,
  InvariantViolation,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NonComposablePath: return "NonComposablePath";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::NotTwoSided: return "NotTwoSided";
    case ErrorKind::ImproperIdeal: return "ImproperIdeal";
    case ErrorKind::UnitNotContained: return "UnitNotContained";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::CutoffExceeded: return "CutoffExceeded";
    case ErrorKind::NotExact: return "NotExact";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotAResolution: return "NotAResolution";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::PsiIndeterminate: return "PsiIndeterminate";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::WitnessIncomplete: return "WitnessIncomplete";
    case ErrorKind::NotNakayama: return "NotNakayama";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The text without the kind prefix, for re-raising with added context.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace fdalg
