#pragma once

// Arithmetic in the two non-unital rings of order six,
//
//   H23 = <a, b | 2a = 0, 3b = 0, a^2 = a, b^2 = 0, ab = ba = 0>
//   H32 = <a, b | 2a = 0, 3b = 0, a^2 = 0, b^2 = b, ab = ba = 0>
//
// with c = a + b, d = 2b, e = a + 2b. Both rings split as J_a + J_b with
// J_a = {0, a} ~ F2 and J_b = {0, b, d} ~ F3, and every element is stored
// as its pair of components (x in F2, y in F3) so that u = x*a + y*b.

#include "hz/field.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

namespace hz {

enum class RingId : std::uint8_t { H23, H32 };

std::string_view to_string(RingId ring) noexcept;
std::optional<RingId> parse_ring(std::string_view text) noexcept;

class Element {
 public:
  constexpr Element() noexcept = default;

  /// Element x*a + y*b. Components are reduced mod 2 and mod 3.
  static constexpr Element compose(unsigned x, unsigned y) noexcept {
    return Element(static_cast<std::uint8_t>(x % 2), static_cast<std::uint8_t>(y % 3));
  }

  /// One of '0', 'a', 'b', 'c', 'd', 'e'.
  static std::optional<Element> from_symbol(char symbol) noexcept;

  constexpr Scalar binary() const noexcept { return x_; }
  constexpr Scalar ternary() const noexcept { return y_; }

  /// Position in the symbol order 0, a, b, c, d, e.
  constexpr unsigned index() const noexcept { return x_ + 2u * y_; }

  char symbol() const noexcept;

  friend constexpr bool operator==(Element l, Element r) noexcept {
    return l.x_ == r.x_ && l.y_ == r.y_;
  }
  friend constexpr std::strong_ordering operator<=>(Element l, Element r) noexcept {
    return l.index() <=> r.index();
  }

 private:
  constexpr Element(std::uint8_t x, std::uint8_t y) noexcept : x_(x), y_(y) {}

  std::uint8_t x_ = 0;
  std::uint8_t y_ = 0;
};

namespace elements {
inline constexpr Element zero = Element::compose(0, 0);
inline constexpr Element a = Element::compose(1, 0);
inline constexpr Element b = Element::compose(0, 1);
inline constexpr Element c = Element::compose(1, 1);
inline constexpr Element d = Element::compose(0, 2);
inline constexpr Element e = Element::compose(1, 2);
}  // namespace elements

/// All six elements in symbol order.
inline constexpr std::array<Element, 6> kAllElements = {
    elements::zero, elements::a, elements::b, elements::c, elements::d, elements::e};

constexpr Element add(Element u, Element v) noexcept {
  return Element::compose(u.binary() + v.binary(), u.ternary() + v.ternary());
}

constexpr Element negate(Element u) noexcept {
  return Element::compose(u.binary(), 3u - u.ternary());
}

constexpr Element subtract(Element u, Element v) noexcept { return add(u, negate(v)); }

/// Multiplication is ring dependent: H23 keeps only the F2 product, H32
/// only the F3 product.
constexpr Element mul(RingId ring, Element u, Element v) noexcept {
  if (ring == RingId::H23) return Element::compose(unsigned{u.binary()} * v.binary(), 0);
  return Element::compose(0, unsigned{u.ternary()} * v.ternary());
}

constexpr std::pair<Scalar, Scalar> decompose(Element u) noexcept {
  return {u.binary(), u.ternary()};
}

/// F_p-module action on the ideal J_a (p = 2) or J_b (p = 3).
/// Throws Error(IdealMismatch) when u lies outside that ideal.
Element scalar_act(Prime p, Scalar s, Element u);

}  // namespace hz
