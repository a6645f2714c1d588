#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace refloor {

enum class ErrorKind {
  InvalidArguments,
  Parse,
  NotSubmultiset,
  NotDivisible,
  DivisionByZero,
  HalfPowerAtMinusOne,
  IndexOutOfRange,
  UnknownVertex,
  SpecInvalid,
  NonTermination,
  CacheCorrupt,
  NotPolynomialInQ,
  NotPalindromic,
  IntegralityFailure,
  InvariantViolation,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArguments: return "InvalidArguments";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NotSubmultiset: return "NotSubmultiset";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::HalfPowerAtMinusOne: return "HalfPowerAtMinusOne";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::SpecInvalid: return "SpecInvalid";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::CacheCorrupt: return "CacheCorrupt";
    case ErrorKind::NotPolynomialInQ: return "NotPolynomialInQ";
    case ErrorKind::NotPalindromic: return "NotPalindromic";
    case ErrorKind::IntegralityFailure: return "IntegralityFailure";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so that front ends can
/// map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace refloor
