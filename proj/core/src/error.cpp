#include "hz/error.hpp"

namespace hz {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::IdealMismatch: return "IdealMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::OddLength: return "OddLength";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::KOutOfRange: return "KOutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace hz
