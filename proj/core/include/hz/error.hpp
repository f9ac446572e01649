#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hz {

enum class Errc {
  IdealMismatch,
  DimensionMismatch,
  OddLength,
  LengthMismatch,
  RingMismatch,
  BudgetExceeded,
  KOutOfRange,
  ParseError,
  VerificationFailed,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc kinds so
/// that front ends can map it onto a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hz
