#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace necklace {

enum class ErrorCode {
  ZeroDenominator,
  BothZero,
  ParseError,
  InvalidArgument,
  ChartMismatch,
  WrongChart,
  NotInvertible,
  UnknownChart,
  NotPoisson,
  ZeroDensity,
  SamplePointOutsideDomain,
  DegenerateJacobian,
  DegenerateFamily,
  OutOfRange,
  CapTooSmall,
  SingularOnLoop,
  Underdetermined,
  Inconsistent,
  UsageError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this one exception type; the
// code distinguishes the documented error cases.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace necklace
