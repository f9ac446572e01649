#pragma once

// Linear codes over H23 and H32. Every H_z-submodule of H_z^n splits
// uniquely as C = a*Ca + b*Cb with a binary code Ca and a ternary code Cb,
// and an HzCode stores exactly that pair. Words are always derived.

#include "hz/gf.hpp"
#include "hz/permutation.hpp"
#include "hz/ring.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hz {

/// Default cap on the number of words enumerated from an H_z-code (6^8).
inline constexpr std::uint64_t kDefaultWordBudget = 1679616;

struct HzWord {
  RingId ring;
  std::vector<Element> coords;

  /// a*u + b*v. Throws Error(LengthMismatch).
  static HzWord compose(RingId ring, const Vector& binary, const Vector& ternary);
  /// Parses symbols from {0,a,b,c,d,e}. Throws Error(ParseError).
  static HzWord parse(RingId ring, std::string_view symbols);

  std::size_t size() const noexcept { return coords.size(); }
  Vector binary_part() const;
  Vector ternary_part() const;
  std::string str() const;

  friend bool operator==(const HzWord&, const HzWord&) = default;
  friend auto operator<=>(const HzWord&, const HzWord&) = default;
};

class HzCode {
 public:
  /// Code a*ca + b*cb. Throws Error(DimensionMismatch) if ca is not binary or
  /// cb not ternary, Error(LengthMismatch) if lengths differ, and
  /// Error(OddLength) unless the length is even and positive.
  static HzCode build(RingId ring, LinearCode ca, LinearCode cb);

  RingId ring() const noexcept { return ring_; }
  std::size_t length() const noexcept { return ca_.length(); }
  std::size_t half() const noexcept { return ca_.length() / 2; }
  const LinearCode& binary() const noexcept { return ca_; }
  const LinearCode& ternary() const noexcept { return cb_; }

  /// 2^dim(Ca) * 3^dim(Cb).
  BigInt cardinality() const;

  bool contains(const HzWord& w) const;

  friend bool operator==(const HzCode&, const HzCode&) = default;
  friend auto operator<=>(const HzCode&, const HzCode&) = default;

 private:
  HzCode(RingId ring, LinearCode ca, LinearCode cb)
      : ring_(ring), ca_(std::move(ca)), cb_(std::move(cb)) {}

  RingId ring_;
  LinearCode ca_;
  LinearCode cb_;
};

/// All words a*u + b*v, u running over Ca (outer) and v over Cb (inner), each
/// in codeword order. Throws Error(BudgetExceeded).
std::vector<HzWord> enumerate_words(const HzCode& code, std::uint64_t budget = kDefaultWordBudget);

/// Additive generators a*g and b*h for the generator rows g of Ca and h of
/// Cb. Every codeword is a sum of these.
std::vector<HzWord> additive_generators(const HzCode& code);

/// a*<x1,x2>_s over H23, b*<y1,y2>_s over H32.
/// Throws Error(RingMismatch), Error(LengthMismatch) or Error(OddLength).
Element hz_symplectic_inner(const HzWord& lhs, const HzWord& rhs);

/// Sum of coordinatewise ring products.
/// Throws Error(RingMismatch) or Error(LengthMismatch).
Element hz_euclidean_inner(const HzWord& lhs, const HzWord& rhs);

/// Symplectic dual through the component formulas:
///   H23: a*Ca^perp + b*F3^n,   H32: a*F2^n + b*Cb^perp.
HzCode dual(const HzCode& code);

/// Symplectic dual by scanning all 6^n words of H_z^n and keeping those
/// orthogonal to the code. Returned sorted. Throws Error(BudgetExceeded)
/// when 6^n exceeds budget.
std::vector<HzWord> dual_bruteforce(const HzCode& code, std::uint64_t budget = kDefaultWordBudget);

struct Flags {
  bool so = false;
  bool sd = false;
  bool qsd = false;
  bool nice = false;
  bool lcd = false;

  friend bool operator==(const Flags&, const Flags&) = default;
};

bool is_self_orthogonal(const HzCode& code);
bool is_self_dual(const HzCode& code);
bool is_quasi_self_dual(const HzCode& code);
bool is_nice(const HzCode& code);
bool is_lcd(const HzCode& code);
Flags flags(const HzCode& code);

/// Euclidean self-orthogonality, checked on additive generators.
bool is_euclidean_self_orthogonal(const HzCode& code);

/// Some coordinate permutation sending lhs onto rhs, searched over all of
/// S_n. Throws Error(RingMismatch), Error(LengthMismatch), or
/// Error(BudgetExceeded) for n > 8.
std::optional<Permutation> equivalent(const HzCode& lhs, const HzCode& rhs);

/// Component image (pi(Ca), pi(Cb)).
HzCode apply_perm(const Permutation& pi, const HzCode& code);

}  // namespace hz
