#pragma once

#include <stdexcept>
#include <string>

namespace winf {

// Absolute tolerance for structural comparisons (piece boundaries, set
// membership, "displacement equals the critical value").
inline constexpr double kStructuralTol = 1e-12;

// Absolute tolerance for integral / report quantities (dual values,
// feasibility violations, mass balance).
inline constexpr double kReportTol = 1e-9;

enum class ErrorKind {
  OverlappingPieces,
  NegativeDensity,
  MassNotOne,
  DomainError,
  DegenerateCritical,
  MassMismatch,
  BandViolation,
  MarginalMismatch,
  SizeMismatch,
  CapExceeded,
  Infeasible,
  BudgetExceeded,
  ParseError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::OverlappingPieces: return "OverlappingPieces";
    case ErrorKind::NegativeDensity: return "NegativeDensity";
    case ErrorKind::MassNotOne: return "MassNotOne";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DegenerateCritical: return "DegenerateCritical";
    case ErrorKind::MassMismatch: return "MassMismatch";
    case ErrorKind::BandViolation: return "BandViolation";
    case ErrorKind::MarginalMismatch: return "MarginalMismatch";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace winf
