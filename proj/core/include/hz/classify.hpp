#pragma once

// Classification of H_z-codes up to coordinate permutation.
//
// The component that decides self-orthogonality (Ca over H23, Cb over H32)
// is kept fixed and sigma acts on the other one:
//
//   H23: a*Ca + b*sigma(Cb)        H32: a*sigma(Ca) + b*Cb
//
// For a fixed pair these codes are pairwise inequivalent exactly when the
// sigmas lie in distinct double cosets Aut(fixed) \ S_n / Aut(moved), so one
// code per double coset is emitted. The symplectic form is not invariant
// under arbitrary coordinate permutations, so moving the governing
// component instead would not preserve self-orthogonality.

#include "hz/code.hpp"
#include "hz/gf.hpp"
#include "hz/group.hpp"
#include "hz/permutation.hpp"
#include "hz/ring.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hz {

enum class Target { SO, QSD, SD };

std::string_view to_string(Target target) noexcept;
std::optional<Target> parse_target(std::string_view text) noexcept;

/// Component condition a pair must meet for every realized code to have the
/// target property.
///   SO : the governing component (Ca for H23, Cb for H32) is self-orthogonal.
///   QSD: the governing component is self-dual, the other has dimension n/2.
///   SD : the governing component is self-dual, the other is the full space.
bool admissible(RingId ring, Target target, const LinearCode& ca, const LinearCode& cb);

/// True when a code already has the target property.
bool satisfies(const HzCode& code, Target target);

struct ClassificationRecord {
  RingId ring = RingId::H23;
  std::size_t n = 0;
  std::size_t ca_id = 0;
  std::size_t cb_id = 0;
  Permutation sigma;
  Flags flags;
  BigInt cardinality;
};

struct PairSummary {
  std::size_t ca_id = 0;
  std::size_t cb_id = 0;
  std::uint64_t aut_a_order = 0;
  std::uint64_t aut_b_order = 0;
  std::size_t count = 0;

  friend bool operator==(const PairSummary&, const PairSummary&) = default;
};

struct Classification {
  std::vector<ClassificationRecord> records;
  std::vector<PairSummary> pairs;  // admissible pairs only
};

/// Which component sigma acts on: ternary for H23, binary for H32.
Prime moved_component(RingId ring) noexcept;

/// Code named by a record: a*Ca + b*sigma(Cb) over H23, a*sigma(Ca) + b*Cb
/// over H32.
HzCode realize(const ClassificationRecord& record, std::span<const LinearCode> binary,
               std::span<const LinearCode> ternary);

/// One record per double coset for every admissible pair in binary x ternary,
/// ordered by (ca_id, cb_id, representative). Component lists must be
/// internally inequivalent. Throws Error(LengthMismatch), Error(OddLength),
/// Error(DimensionMismatch) or Error(BudgetExceeded).
Classification classify(RingId ring, std::span<const LinearCode> binary,
                        std::span<const LinearCode> ternary, Target target);

/// Permutation-invariant key: the least (pi(Ca), pi(Cb)) over all pi in S_n.
/// Two codes are equivalent exactly when their keys are equal.
/// Throws Error(BudgetExceeded) for n > 8.
HzCode canonical_form(const HzCode& code);
LinearCode canonical_form(const LinearCode& code);

/// Keeps the first code of every permutation class, preserving order.
std::vector<LinearCode> inequivalent_codes(std::span<const LinearCode> codes);

struct VerificationReport {
  bool sound = true;
  bool inequivalent = true;
  bool complete = true;
  std::vector<std::string> problems;

  bool ok() const noexcept { return sound && inequivalent && complete; }
};

/// Checks that every record realizes a code with the target property, that no
/// two records are equivalent, and that every code obtained from an
/// admissible pair by permuting one component with any sigma in S_n is
/// equivalent to some record.
/// Throws Error(BudgetExceeded) for n > 6.
VerificationReport verify_classification(std::span<const ClassificationRecord> records,
                                         RingId ring, std::span<const LinearCode> binary,
                                         std::span<const LinearCode> ternary, Target target);

struct ComponentLists {
  std::vector<LinearCode> binary;
  std::vector<LinearCode> ternary;
};

/// Inequivalent component candidates for a target: the governing component
/// runs over isotropic subspaces (all dimensions for SO, dimension n/2
/// otherwise), the other over all subspaces (SO), the n/2-dimensional ones
/// (QSD), or the full space (SD). Throws Error(BudgetExceeded).
ComponentLists component_lists(RingId ring, std::size_t n, Target target,
                               std::uint64_t budget = 1u << 22);

}  // namespace hz
