#include "besselrad/error.hpp"

namespace besselrad {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::BracketInvalid: return "BracketInvalid";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorKind::RatioNotSmall: return "RatioNotSmall";
    case ErrorKind::ConvergenceDomain: return "ConvergenceDomain";
    case ErrorKind::NegativeArgument: return "NegativeArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

}  // namespace besselrad
