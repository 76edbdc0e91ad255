#pragma once

#include <stdexcept>
#include <string>

namespace reflekta {

enum class ErrorKind {
  DimensionMismatch,
  NonIntegral,
  IsotropicReflection,
  NotSublattice,
  NotMember,
  BadPrimeStructure,
  InfiniteQuotient,
  InadmissibleRank,
  ConditionViolated,
  RankMismatch,
  EmptyInput,
  BrokenString,
  Unsupported,
  NotReflectable,
  SearchSpaceTooLarge,
  HypothesisViolated,
  ParseError,
  Disconnected,
  SimplyLaced,
};

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::IsotropicReflection: return "IsotropicReflection";
    case ErrorKind::NotSublattice: return "NotSublattice";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::BadPrimeStructure: return "BadPrimeStructure";
    case ErrorKind::InfiniteQuotient: return "InfiniteQuotient";
    case ErrorKind::InadmissibleRank: return "InadmissibleRank";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::BrokenString: return "BrokenString";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::NotReflectable: return "NotReflectable";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::SimplyLaced: return "SimplyLaced";
  }
  return "Unknown";
}

/// Every failure raised by the library. `detail` carries the clause name for
/// ConditionViolated / HypothesisViolated and the field path for ParseError.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string detail = {})
      : std::runtime_error(std::string(kind_name(kind)) + ": " + message),
        kind_(kind),
        detail_(std::move(detail)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace reflekta
