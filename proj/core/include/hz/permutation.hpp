#pragma once

#include "hz/gf.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hz {

/// Largest length for which S_n is scanned exhaustively.
inline constexpr std::size_t kMaxExhaustiveLength = 8;

/// A permutation of coordinate positions. Stored 0-based; the one-line
/// notation exposed to users is 1-based.
///
/// Composition follows functions: (f * g)(i) = f(g(i)), and a permutation
/// moves coordinate i of a vector to position pi(i), so
/// apply(f * g, v) = apply(f, apply(g, v)).
class Permutation {
 public:
  explicit Permutation(std::size_t n = 0);

  static Permutation identity(std::size_t n) { return Permutation(n); }
  /// 1-based one-line notation. Throws Error(ParseError) unless it is a
  /// bijection of 1..n.
  static Permutation from_one_line(std::span<const int> images);
  static Permutation from_one_line(std::initializer_list<int> images);
  /// Swap of 1-based positions i and j.
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const noexcept { return images_[i]; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  std::vector<int> one_line() const;
  /// Cycle notation with 1-based points, e.g. "(1 2)(3 5 4)"; "()" for identity.
  std::string cycles() const;

  friend Permutation operator*(const Permutation& f, const Permutation& g);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

std::uint64_t factorial(std::size_t n);

/// Rank in lexicographic order of one-line notation (Lehmer code).
std::uint64_t lehmer_rank(const Permutation& p);
Permutation lehmer_unrank(std::size_t n, std::uint64_t rank);

/// Throws Error(DimensionMismatch).
Vector apply_perm(const Permutation& pi, const Vector& v);
LinearCode apply_perm(const Permutation& pi, const LinearCode& code);

}  // namespace hz
