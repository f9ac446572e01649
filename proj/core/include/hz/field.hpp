#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string_view>

namespace hz {

using BigInt = boost::multiprecision::cpp_int;

/// The two prime fields the library works over.
enum class Prime : std::uint8_t { Two = 2, Three = 3 };

using Scalar = std::uint8_t;

constexpr unsigned modulus(Prime p) noexcept { return static_cast<unsigned>(p); }

constexpr Scalar reduce(Prime p, int v) noexcept {
  const int q = static_cast<int>(modulus(p));
  return static_cast<Scalar>(((v % q) + q) % q);
}

constexpr Scalar add(Prime p, Scalar a, Scalar b) noexcept {
  const unsigned s = unsigned{a} + b;
  return static_cast<Scalar>(s >= modulus(p) ? s - modulus(p) : s);
}

constexpr Scalar sub(Prime p, Scalar a, Scalar b) noexcept {
  return static_cast<Scalar>(a >= b ? a - b : a + modulus(p) - b);
}

constexpr Scalar neg(Prime p, Scalar a) noexcept { return sub(p, 0, a); }

constexpr Scalar mul(Prime p, Scalar a, Scalar b) noexcept {
  return static_cast<Scalar>((unsigned{a} * b) % modulus(p));
}

/// Inverse of a nonzero scalar. Over F2 and F3 every unit is its own inverse.
constexpr Scalar inv(Prime, Scalar a) noexcept { return a; }

std::string_view to_string(Prime p) noexcept;

/// Accepts "2" or "3".
Prime parse_prime(std::string_view text);

/// Integer power as an exact big integer.
BigInt ipow(unsigned base, unsigned exp);

}  // namespace hz
