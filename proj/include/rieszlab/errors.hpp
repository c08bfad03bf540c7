#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rieszlab {

enum class ErrorKind {
  RatioViolation,
  Overflow,
  TooLarge,
  NotDissociate,
  Budget,
  NoConvergence,
  SandwichFailure,
  NoAdmissibleEps,
  HypothesisViolation,
  ConfigInvalid,
  IoFailure,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// batch drivers can record it per instance and keep going.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RatioViolation: return "RatioViolation";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotDissociate: return "NotDissociate";
    case ErrorKind::Budget: return "Budget";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::SandwichFailure: return "SandwichFailure";
    case ErrorKind::NoAdmissibleEps: return "NoAdmissibleEps";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::IoFailure: return "IoFailure";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace rieszlab
