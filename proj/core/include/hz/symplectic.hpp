#pragma once

// Symplectic forms on F_p^{2m}. A vector is split into contiguous halves
// v = (v1 | v2) and
//
//   <x, y>_s = x1 . y2 + x2 . y1   over F2,
//   <x, y>_s = x1 . y2 - x2 . y1   over F3,
//
// i.e. x * Omega * y^T with Omega = (0 I; -I 0). Over F2 the sign vanishes,
// so one gram matrix serves both primes.

#include "hz/gf.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hz {

class SymplecticSpace {
 public:
  SymplecticSpace(Prime p, std::size_t half_length);

  /// Space of even length n. Throws Error(OddLength).
  static SymplecticSpace for_length(Prime p, std::size_t n);
  static SymplecticSpace of(const LinearCode& code) {
    return for_length(code.prime(), code.length());
  }

  Prime prime() const noexcept { return p_; }
  std::size_t half() const noexcept { return m_; }
  std::size_t length() const noexcept { return 2 * m_; }
  const Matrix& gram() const noexcept { return gram_; }

  /// Throws Error(DimensionMismatch) on a field or length mismatch.
  Scalar inner(const Vector& x, const Vector& y) const;

 private:
  Prime p_;
  std::size_t m_;
  Matrix gram_;
};

Scalar symplectic_inner(const SymplecticSpace& space, const Vector& x, const Vector& y);

LinearCode symplectic_dual(const SymplecticSpace& space, const LinearCode& code);
/// Throws Error(OddLength) for odd code length.
LinearCode symplectic_dual(const LinearCode& code);

bool is_self_orthogonal(const LinearCode& code);
bool is_self_dual(const LinearCode& code);
bool is_lcd(const LinearCode& code);

/// Number of k-dimensional totally isotropic subspaces of F_p^{2m}:
///
///   prod_{i=0}^{k-1} (p^{2m-2i} - 1) / prod_{j=1}^{k} (p^j - 1).
///
/// Throws Error(KOutOfRange) if k > m.
BigInt count_isotropic_formula(Prime p, std::size_t m, std::size_t k);

/// Default cap on p^(k*n) for isotropic enumeration (2^32).
inline constexpr std::uint64_t kDefaultIsotropicBudget = std::uint64_t{1} << 32;

/// Every k-dimensional totally isotropic subspace, built row by row over
/// reduced echelon profiles with pruning on the form. Output order is pivot
/// sets lexicographic, then free entries lexicographic.
/// Throws Error(KOutOfRange) or Error(BudgetExceeded).
std::vector<LinearCode> enumerate_isotropic(const SymplecticSpace& space, std::size_t k,
                                            std::uint64_t budget = kDefaultIsotropicBudget);

}  // namespace hz
