#include "hz/code.hpp"

#include "hz/error.hpp"
#include "hz/symplectic.hpp"

#include <algorithm>
#include <string>

namespace hz {

namespace {

void require_compatible(const HzWord& lhs, const HzWord& rhs) {
  if (lhs.ring != rhs.ring)
    throw Error(Errc::RingMismatch, "words over " + std::string(to_string(lhs.ring)) + " and " +
                                        std::string(to_string(rhs.ring)));
  if (lhs.size() != rhs.size())
    throw Error(Errc::LengthMismatch, "words of length " + std::to_string(lhs.size()) + " and " +
                                          std::to_string(rhs.size()));
}

// Image of every generator row under pi lies in target; with equal
// dimensions this means pi(source) == target.
bool maps_onto(const Permutation& pi, const LinearCode& source, const LinearCode& target) {
  for (const auto& g : source.generator())
    if (!target.contains(apply_perm(pi, g))) return false;
  return true;
}

}  // namespace

HzWord HzWord::compose(RingId ring, const Vector& binary, const Vector& ternary) {
  if (binary.prime() != Prime::Two || ternary.prime() != Prime::Three)
    throw Error(Errc::DimensionMismatch, "word components must be binary and ternary");
  if (binary.size() != ternary.size())
    throw Error(Errc::LengthMismatch, "binary part of length " + std::to_string(binary.size()) +
                                          ", ternary part of length " + std::to_string(ternary.size()));
  HzWord w{ring, std::vector<Element>(binary.size())};
  for (std::size_t i = 0; i < binary.size(); ++i) w.coords[i] = Element::compose(binary[i], ternary[i]);
  return w;
}

HzWord HzWord::parse(RingId ring, std::string_view symbols) {
  HzWord w{ring, {}};
  w.coords.reserve(symbols.size());
  for (char ch : symbols) {
    auto e = Element::from_symbol(ch);
    if (!e) throw Error(Errc::ParseError, "invalid ring symbol '" + std::string(1, ch) + "'");
    w.coords.push_back(*e);
  }
  return w;
}

Vector HzWord::binary_part() const {
  Vector v(Prime::Two, coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) v.set(i, coords[i].binary());
  return v;
}

Vector HzWord::ternary_part() const {
  Vector v(Prime::Three, coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) v.set(i, coords[i].ternary());
  return v;
}

std::string HzWord::str() const {
  std::string s;
  s.reserve(coords.size());
  for (auto e : coords) s += e.symbol();
  return s;
}

HzCode HzCode::build(RingId ring, LinearCode ca, LinearCode cb) {
  if (ca.prime() != Prime::Two) throw Error(Errc::DimensionMismatch, "the a-component must be a binary code");
  if (cb.prime() != Prime::Three) throw Error(Errc::DimensionMismatch, "the b-component must be a ternary code");
  if (ca.length() != cb.length())
    throw Error(Errc::LengthMismatch, "component lengths " + std::to_string(ca.length()) + " and " +
                                          std::to_string(cb.length()) + " differ");
  if (ca.length() == 0 || ca.length() % 2 != 0)
    throw Error(Errc::OddLength, "code length must be even and positive, got " + std::to_string(ca.length()));
  return HzCode(ring, std::move(ca), std::move(cb));
}

BigInt HzCode::cardinality() const { return ca_.cardinality() * cb_.cardinality(); }

bool HzCode::contains(const HzWord& w) const {
  if (w.ring != ring_ || w.size() != length()) return false;
  return ca_.contains(w.binary_part()) && cb_.contains(w.ternary_part());
}

std::vector<HzWord> enumerate_words(const HzCode& code, std::uint64_t budget) {
  if (code.cardinality() > budget)
    throw Error(Errc::BudgetExceeded, "code has " + code.cardinality().str() + " words, budget is " +
                                          std::to_string(budget));
  const auto us = code.binary().codewords(budget);
  const auto vs = code.ternary().codewords(budget);
  std::vector<HzWord> out;
  out.reserve(us.size() * vs.size());
  for (const auto& u : us)
    for (const auto& v : vs) out.push_back(HzWord::compose(code.ring(), u, v));
  return out;
}

std::vector<HzWord> additive_generators(const HzCode& code) {
  const std::size_t n = code.length();
  const Vector zero2(Prime::Two, n);
  const Vector zero3(Prime::Three, n);
  std::vector<HzWord> out;
  for (const auto& g : code.binary().generator()) out.push_back(HzWord::compose(code.ring(), g, zero3));
  for (const auto& h : code.ternary().generator()) out.push_back(HzWord::compose(code.ring(), zero2, h));
  return out;
}

Element hz_symplectic_inner(const HzWord& lhs, const HzWord& rhs) {
  require_compatible(lhs, rhs);
  if (lhs.ring == RingId::H23) {
    const Scalar s = SymplecticSpace::for_length(Prime::Two, lhs.size()).inner(lhs.binary_part(), rhs.binary_part());
    return Element::compose(s, 0);
  }
  const Scalar s = SymplecticSpace::for_length(Prime::Three, lhs.size()).inner(lhs.ternary_part(), rhs.ternary_part());
  return Element::compose(0, s);
}

Element hz_euclidean_inner(const HzWord& lhs, const HzWord& rhs) {
  require_compatible(lhs, rhs);
  Element acc = elements::zero;
  for (std::size_t i = 0; i < lhs.size(); ++i) acc = add(acc, mul(lhs.ring, lhs.coords[i], rhs.coords[i]));
  return acc;
}

HzCode dual(const HzCode& code) {
  const std::size_t n = code.length();
  if (code.ring() == RingId::H23)
    return HzCode::build(code.ring(), symplectic_dual(code.binary()), LinearCode::full(Prime::Three, n));
  return HzCode::build(code.ring(), LinearCode::full(Prime::Two, n), symplectic_dual(code.ternary()));
}

std::vector<HzWord> dual_bruteforce(const HzCode& code, std::uint64_t budget) {
  const std::size_t n = code.length();
  if (ipow(6, static_cast<unsigned>(n)) > budget)
    throw Error(Errc::BudgetExceeded, "6^" + std::to_string(n) + " candidate words exceed the budget of " +
                                          std::to_string(budget));
  // The form is additive in each argument, so orthogonality to every codeword
  // is the same as orthogonality to a set of additive generators.
  const auto gens = additive_generators(code);
  std::vector<HzWord> out;
  HzWord y{code.ring(), std::vector<Element>(n, elements::zero)};
  std::vector<unsigned> digits(n, 0);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) y.coords[i] = kAllElements[digits[i]];
    if (std::all_of(gens.begin(), gens.end(),
                    [&](const HzWord& g) { return hz_symplectic_inner(y, g) == elements::zero; }))
      out.push_back(y);
    std::size_t i = n;
    while (i > 0 && digits[i - 1] == 5) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_self_orthogonal(const HzCode& code) {
  return code.ring() == RingId::H23 ? is_self_orthogonal(code.binary()) : is_self_orthogonal(code.ternary());
}

bool is_self_dual(const HzCode& code) {
  if (code.ring() == RingId::H23) return is_self_dual(code.binary()) && code.ternary().is_full();
  return code.binary().is_full() && is_self_dual(code.ternary());
}

bool is_quasi_self_dual(const HzCode& code) {
  const std::size_t m = code.half();
  if (code.ring() == RingId::H23) return is_self_dual(code.binary()) && code.ternary().dim() == m;
  return code.binary().dim() == m && is_self_dual(code.ternary());
}

bool is_nice(const HzCode& code) {
  return code.ring() == RingId::H23 ? code.ternary().is_zero() : code.binary().is_zero();
}

bool is_lcd(const HzCode& code) {
  if (code.ring() == RingId::H23) return is_lcd(code.binary()) && code.ternary().is_zero();
  return code.binary().is_zero() && is_lcd(code.ternary());
}

Flags flags(const HzCode& code) {
  return Flags{is_self_orthogonal(code), is_self_dual(code), is_quasi_self_dual(code), is_nice(code),
               is_lcd(code)};
}

bool is_euclidean_self_orthogonal(const HzCode& code) {
  const auto gens = additive_generators(code);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j)
      if (hz_euclidean_inner(gens[i], gens[j]) != elements::zero) return false;
  return true;
}

std::optional<Permutation> equivalent(const HzCode& lhs, const HzCode& rhs) {
  if (lhs.ring() != rhs.ring())
    throw Error(Errc::RingMismatch, "codes over " + std::string(to_string(lhs.ring())) + " and " +
                                        std::string(to_string(rhs.ring())));
  if (lhs.length() != rhs.length())
    throw Error(Errc::LengthMismatch, "codes of length " + std::to_string(lhs.length()) + " and " +
                                          std::to_string(rhs.length()));
  const std::size_t n = lhs.length();
  if (n > kMaxExhaustiveLength)
    throw Error(Errc::BudgetExceeded, "exhaustive equivalence search is limited to n <= 8");
  if (lhs.binary().dim() != rhs.binary().dim() || lhs.ternary().dim() != rhs.ternary().dim())
    return std::nullopt;
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<int>(i + 1);
  do {
    const auto pi = Permutation::from_one_line(images);
    if (maps_onto(pi, lhs.binary(), rhs.binary()) && maps_onto(pi, lhs.ternary(), rhs.ternary())) return pi;
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

HzCode apply_perm(const Permutation& pi, const HzCode& code) {
  return HzCode::build(code.ring(), apply_perm(pi, code.binary()), apply_perm(pi, code.ternary()));
}

}  // namespace hz
