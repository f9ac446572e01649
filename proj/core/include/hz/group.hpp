#pragma once

#include "hz/gf.hpp"
#include "hz/permutation.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hz {

/// A subgroup of S_n held as its full sorted element list together with a
/// generating set.
class PermGroup {
 public:
  /// Group with the given elements. The list must be closed under
  /// composition; a generating set is extracted greedily.
  static PermGroup from_elements(std::size_t n, std::vector<Permutation> elements);
  /// Closure of the generators. Throws Error(BudgetExceeded) for n > 8.
  static PermGroup generated_by(std::size_t n, std::vector<Permutation> generators);
  static PermGroup trivial(std::size_t n);
  static PermGroup symmetric(std::size_t n);

  std::size_t degree() const noexcept { return n_; }
  std::uint64_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  bool contains(const Permutation& p) const;
  /// Identity present, closed under products and inverses, and the generators
  /// reproduce the element list.
  bool is_valid() const;

 private:
  PermGroup(std::size_t n, std::vector<Permutation> elements, std::vector<Permutation> generators)
      : n_(n), elements_(std::move(elements)), generators_(std::move(generators)) {}

  std::size_t n_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

/// {pi in S_n : pi(code) = code}, by scanning S_n.
/// Throws Error(BudgetExceeded) for n > 8.
PermGroup automorphism_group(const LinearCode& code);

struct DoubleCoset {
  Permutation rep;  // lexicographically least element
  std::uint64_t size = 0;
};

/// The double cosets G \ S_n / H, i.e. orbits of sigma -> g * sigma * h.
/// Orbits are closed by breadth-first search over generator moves on a dense
/// table indexed by Lehmer rank; they come out ordered by representative.
/// Throws Error(DimensionMismatch) or Error(BudgetExceeded).
std::vector<DoubleCoset> double_cosets(const PermGroup& left, const PermGroup& right);
std::vector<Permutation> double_coset_reps(const PermGroup& left, const PermGroup& right);

}  // namespace hz
