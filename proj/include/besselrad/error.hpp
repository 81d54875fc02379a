#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace besselrad {

enum class ErrorKind {
  BracketInvalid,
  NoConvergence,
  OrderOutOfRange,
  RatioNotSmall,
  ConvergenceDomain,
  NegativeArgument,
  DivisionByZero,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every computation failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace besselrad
