#include "hz/field.hpp"

#include "hz/error.hpp"

#include <string>

namespace hz {

std::string_view to_string(Prime p) noexcept { return p == Prime::Two ? "2" : "3"; }

Prime parse_prime(std::string_view text) {
  if (text == "2") return Prime::Two;
  if (text == "3") return Prime::Three;
  throw Error(Errc::ParseError, "field characteristic must be 2 or 3, got '" + std::string(text) + "'");
}

BigInt ipow(unsigned base, unsigned exp) {
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace hz
