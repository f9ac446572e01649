#include "hz/classify.hpp"

#include "hz/error.hpp"
#include "hz/symplectic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace hz {

namespace {

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<int>(i + 1);
  do {
    out.push_back(Permutation::from_one_line(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::size_t common_length(std::span<const LinearCode> binary, std::span<const LinearCode> ternary) {
  std::optional<std::size_t> n;
  auto check = [&](const LinearCode& c, Prime expected, const char* role) {
    if (c.prime() != expected)
      throw Error(Errc::DimensionMismatch, std::string(role) + " list holds a code over the wrong field");
    if (!n) n = c.length();
    if (c.length() != *n)
      throw Error(Errc::LengthMismatch, std::string(role) + " list mixes lengths " + std::to_string(*n) +
                                            " and " + std::to_string(c.length()));
  };
  for (const auto& c : binary) check(c, Prime::Two, "binary");
  for (const auto& c : ternary) check(c, Prime::Three, "ternary");
  return n.value_or(0);
}

}  // namespace

std::string_view to_string(Target target) noexcept {
  switch (target) {
    case Target::SO: return "SO";
    case Target::QSD: return "QSD";
    case Target::SD: return "SD";
  }
  return "?";
}

std::optional<Target> parse_target(std::string_view text) noexcept {
  if (text == "SO" || text == "so") return Target::SO;
  if (text == "QSD" || text == "qsd") return Target::QSD;
  if (text == "SD" || text == "sd") return Target::SD;
  return std::nullopt;
}

bool admissible(RingId ring, Target target, const LinearCode& ca, const LinearCode& cb) {
  const LinearCode& governing = ring == RingId::H23 ? ca : cb;
  const LinearCode& other = ring == RingId::H23 ? cb : ca;
  switch (target) {
    case Target::SO: return is_self_orthogonal(governing);
    case Target::QSD: return is_self_dual(governing) && other.dim() == other.length() / 2;
    case Target::SD: return is_self_dual(governing) && other.is_full();
  }
  return false;
}

bool satisfies(const HzCode& code, Target target) {
  switch (target) {
    case Target::SO: return is_self_orthogonal(code);
    case Target::QSD: return is_quasi_self_dual(code);
    case Target::SD: return is_self_dual(code);
  }
  return false;
}

Prime moved_component(RingId ring) noexcept { return ring == RingId::H23 ? Prime::Three : Prime::Two; }

HzCode realize(const ClassificationRecord& record, std::span<const LinearCode> binary,
               std::span<const LinearCode> ternary) {
  if (record.ca_id >= binary.size() || record.cb_id >= ternary.size())
    throw Error(Errc::DimensionMismatch, "record refers to a component outside the lists");
  const LinearCode& ca = binary[record.ca_id];
  const LinearCode& cb = ternary[record.cb_id];
  if (moved_component(record.ring) == Prime::Three)
    return HzCode::build(record.ring, ca, apply_perm(record.sigma, cb));
  return HzCode::build(record.ring, apply_perm(record.sigma, ca), cb);
}

Classification classify(RingId ring, std::span<const LinearCode> binary, std::span<const LinearCode> ternary,
                        Target target) {
  const std::size_t n = common_length(binary, ternary);
  Classification result;
  if (binary.empty() || ternary.empty()) return result;
  if (n == 0 || n % 2 != 0)
    throw Error(Errc::OddLength, "classification needs even positive length, got " + std::to_string(n));
  if (n > kMaxExhaustiveLength)
    throw Error(Errc::BudgetExceeded, "classification is limited to n <= 8, got " + std::to_string(n));

  std::map<std::size_t, PermGroup> aut_b;
  for (std::size_t i = 0; i < binary.size(); ++i) {
    std::optional<PermGroup> aut_a;
    for (std::size_t j = 0; j < ternary.size(); ++j) {
      if (!admissible(ring, target, binary[i], ternary[j])) continue;
      if (!aut_a) aut_a = automorphism_group(binary[i]);
      auto it = aut_b.find(j);
      if (it == aut_b.end()) it = aut_b.emplace(j, automorphism_group(ternary[j])).first;
      const bool move_ternary = moved_component(ring) == Prime::Three;
      const auto cosets = move_ternary ? double_cosets(*aut_a, it->second) : double_cosets(it->second, *aut_a);
      for (const auto& coset : cosets) {
        ClassificationRecord rec{ring, n, i, j, coset.rep, {}, {}};
        const HzCode code = realize(rec, binary, ternary);
        rec.flags = flags(code);
        rec.cardinality = code.cardinality();
        result.records.push_back(std::move(rec));
      }
      result.pairs.push_back(PairSummary{i, j, aut_a->order(), it->second.order(), cosets.size()});
    }
  }
  return result;
}

LinearCode canonical_form(const LinearCode& code) {
  if (code.length() > kMaxExhaustiveLength)
    throw Error(Errc::BudgetExceeded, "canonical form is limited to n <= 8");
  LinearCode best = code;
  for (const auto& pi : all_permutations(code.length())) {
    auto image = apply_perm(pi, code);
    if (image < best) best = std::move(image);
  }
  return best;
}

HzCode canonical_form(const HzCode& code) {
  if (code.length() > kMaxExhaustiveLength)
    throw Error(Errc::BudgetExceeded, "canonical form is limited to n <= 8");
  HzCode best = code;
  for (const auto& pi : all_permutations(code.length())) {
    auto image = apply_perm(pi, code);
    if (image < best) best = std::move(image);
  }
  return best;
}

std::vector<LinearCode> inequivalent_codes(std::span<const LinearCode> codes) {
  std::vector<LinearCode> out;
  std::set<LinearCode> seen;
  std::map<std::size_t, std::vector<Permutation>> perms;
  for (const auto& code : codes) {
    if (seen.contains(code)) continue;
    const std::size_t n = code.length();
    if (n > kMaxExhaustiveLength)
      throw Error(Errc::BudgetExceeded, "equivalence reduction is limited to n <= 8");
    auto it = perms.find(n);
    if (it == perms.end()) it = perms.emplace(n, all_permutations(n)).first;
    for (const auto& pi : it->second) seen.insert(apply_perm(pi, code));
    out.push_back(code);
  }
  return out;
}

VerificationReport verify_classification(std::span<const ClassificationRecord> records, RingId ring,
                                         std::span<const LinearCode> binary, std::span<const LinearCode> ternary,
                                         Target target) {
  const std::size_t n = common_length(binary, ternary);
  if (n > 6)
    throw Error(Errc::BudgetExceeded, "classification verification is limited to n <= 6, got " + std::to_string(n));
  VerificationReport report;
  auto problem = [&](bool& flag, std::string what) {
    flag = false;
    report.problems.push_back(std::move(what));
  };

  std::map<HzCode, std::size_t> keys;
  for (std::size_t r = 0; r < records.size(); ++r) {
    const auto& rec = records[r];
    const std::string tag = "record " + std::to_string(r);
    if (rec.ring != ring || rec.n != n || rec.ca_id >= binary.size() || rec.cb_id >= ternary.size() ||
        rec.sigma.size() != n) {
      problem(report.sound, tag + " does not refer to the given lists");
      continue;
    }
    if (!admissible(ring, target, binary[rec.ca_id], ternary[rec.cb_id]))
      problem(report.sound, tag + " uses an inadmissible component pair");
    const HzCode code = realize(rec, binary, ternary);
    if (!satisfies(code, target)) problem(report.sound, tag + " is not " + std::string(to_string(target)));
    if (flags(code) != rec.flags) problem(report.sound, tag + " carries wrong flags");
    if (code.cardinality() != rec.cardinality) problem(report.sound, tag + " carries a wrong size");
    auto [it, fresh] = keys.emplace(canonical_form(code), r);
    if (!fresh)
      problem(report.inequivalent, tag + " is equivalent to record " + std::to_string(it->second));
  }

  const auto perms = all_permutations(n);
  for (std::size_t i = 0; i < binary.size(); ++i) {
    for (std::size_t j = 0; j < ternary.size(); ++j) {
      if (!admissible(ring, target, binary[i], ternary[j])) continue;
      const bool move_ternary = moved_component(ring) == Prime::Three;
      std::set<LinearCode> images;
      for (const auto& sigma : perms) images.insert(apply_perm(sigma, move_ternary ? ternary[j] : binary[i]));
      for (const auto& image : images) {
        const HzCode code = move_ternary ? HzCode::build(ring, binary[i], image) : HzCode::build(ring, image, ternary[j]);
        if (!keys.contains(canonical_form(code))) {
          problem(report.complete, "pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                       ") realizes a code equivalent to no record");
          break;
        }
      }
    }
  }
  return report;
}

ComponentLists component_lists(RingId ring, std::size_t n, Target target, std::uint64_t budget) {
  if (n == 0 || n % 2 != 0)
    throw Error(Errc::OddLength, "component lists need even positive length, got " + std::to_string(n));
  const std::size_t m = n / 2;
  const Prime governing_prime = ring == RingId::H23 ? Prime::Two : Prime::Three;
  const Prime other_prime = ring == RingId::H23 ? Prime::Three : Prime::Two;
  const SymplecticSpace space(governing_prime, m);

  std::vector<LinearCode> governing;
  if (target == Target::SO) {
    for (std::size_t k = 0; k <= m; ++k) {
      auto part = enumerate_isotropic(space, k);
      governing.insert(governing.end(), part.begin(), part.end());
    }
  } else {
    governing = enumerate_isotropic(space, m);
  }
  governing = inequivalent_codes(governing);

  std::vector<LinearCode> other;
  switch (target) {
    case Target::SO: other = inequivalent_codes(all_subspaces_any_dim(other_prime, n, budget)); break;
    case Target::QSD: other = inequivalent_codes(all_subspaces(other_prime, n, m, budget)); break;
    case Target::SD: other = {LinearCode::full(other_prime, n)}; break;
  }

  if (ring == RingId::H23) return {std::move(governing), std::move(other)};
  return {std::move(other), std::move(governing)};
}

}  // namespace hz
