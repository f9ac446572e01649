#include "hz/ring.hpp"

#include "hz/error.hpp"

#include <string>

namespace hz {

std::string_view to_string(RingId ring) noexcept { return ring == RingId::H23 ? "H23" : "H32"; }

std::optional<RingId> parse_ring(std::string_view text) noexcept {
  if (text == "H23" || text == "h23" || text == "23") return RingId::H23;
  if (text == "H32" || text == "h32" || text == "32") return RingId::H32;
  return std::nullopt;
}

std::optional<Element> Element::from_symbol(char symbol) noexcept {
  switch (symbol) {
    case '0': return elements::zero;
    case 'a': return elements::a;
    case 'b': return elements::b;
    case 'c': return elements::c;
    case 'd': return elements::d;
    case 'e': return elements::e;
    default: return std::nullopt;
  }
}

char Element::symbol() const noexcept {
  static constexpr char kSymbols[] = {'0', 'a', 'b', 'c', 'd', 'e'};
  return kSymbols[index()];
}

Element scalar_act(Prime p, Scalar s, Element u) {
  if (p == Prime::Two) {
    if (u.ternary() != 0)
      throw Error(Errc::IdealMismatch, std::string("element ") + u.symbol() + " is not in J_a");
    return Element::compose(unsigned{u.binary()} * s, 0);
  }
  if (u.binary() != 0)
    throw Error(Errc::IdealMismatch, std::string("element ") + u.symbol() + " is not in J_b");
  return Element::compose(0, unsigned{u.ternary()} * s);
}

}  // namespace hz
