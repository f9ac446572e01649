#include "hz/group.hpp"

#include "hz/error.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace hz {

namespace {

void require_exhaustive(std::size_t n) {
  if (n > kMaxExhaustiveLength)
    throw Error(Errc::BudgetExceeded, "S_" + std::to_string(n) + " is too large to scan (n <= 8)");
}

// Subgroup generated by gens, as a membership table over Lehmer ranks plus
// the element list in discovery order.
struct Closure {
  std::vector<bool> member;
  std::vector<Permutation> elements;
};

Closure close(std::size_t n, const std::vector<Permutation>& gens) {
  Closure c{std::vector<bool>(factorial(n), false), {}};
  const Permutation id(n);
  c.member[lehmer_rank(id)] = true;
  c.elements.push_back(id);
  for (std::size_t head = 0; head < c.elements.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = c.elements[head] * g;
      const auto r = lehmer_rank(next);
      if (c.member[r]) continue;
      c.member[r] = true;
      c.elements.push_back(std::move(next));
    }
  }
  return c;
}

}  // namespace

PermGroup PermGroup::from_elements(std::size_t n, std::vector<Permutation> elements) {
  require_exhaustive(n);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<Permutation> gens;
  std::vector<bool> member(factorial(n), false);
  member[0] = true;
  for (const auto& g : elements) {
    if (member[lehmer_rank(g)]) continue;
    gens.push_back(g);
    member = close(n, gens).member;
  }
  return PermGroup(n, std::move(elements), std::move(gens));
}

PermGroup PermGroup::generated_by(std::size_t n, std::vector<Permutation> generators) {
  require_exhaustive(n);
  for (const auto& g : generators)
    if (g.size() != n) throw Error(Errc::DimensionMismatch, "generator of wrong degree");
  std::erase_if(generators, [](const Permutation& g) { return g.is_identity(); });
  auto elements = close(n, generators).elements;
  std::sort(elements.begin(), elements.end());
  return PermGroup(n, std::move(elements), std::move(generators));
}

PermGroup PermGroup::trivial(std::size_t n) { return PermGroup(n, {Permutation(n)}, {}); }

PermGroup PermGroup::symmetric(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::transposition(n, 1, 2));
    if (n >= 3) {
      std::vector<int> cycle(n);
      for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<int>((i + 1) % n + 1);
      gens.push_back(Permutation::from_one_line(cycle));
    }
  }
  return generated_by(n, std::move(gens));
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_valid() const {
  if (!contains(Permutation(n_))) return false;
  for (const auto& x : elements_) {
    if (!contains(x.inverse())) return false;
    for (const auto& g : generators_)
      if (!contains(x * g)) return false;
  }
  auto generated = close(n_, generators_).elements;
  std::sort(generated.begin(), generated.end());
  return generated == elements_;
}

PermGroup automorphism_group(const LinearCode& code) {
  const std::size_t n = code.length();
  require_exhaustive(n);
  std::vector<Permutation> auts;
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<int>(i + 1);
  do {
    auto pi = Permutation::from_one_line(images);
    bool fixes = true;
    for (const auto& g : code.generator()) {
      if (!code.contains(apply_perm(pi, g))) {
        fixes = false;
        break;
      }
    }
    if (fixes) auts.push_back(std::move(pi));
  } while (std::next_permutation(images.begin(), images.end()));
  return PermGroup::from_elements(n, std::move(auts));
}

std::vector<DoubleCoset> double_cosets(const PermGroup& left, const PermGroup& right) {
  if (left.degree() != right.degree()) throw Error(Errc::DimensionMismatch, "groups of different degree");
  const std::size_t n = left.degree();
  require_exhaustive(n);
  const std::uint64_t total = factorial(n);
  std::vector<bool> visited(total, false);
  std::vector<DoubleCoset> out;
  std::deque<Permutation> queue;
  for (std::uint64_t r = 0; r < total; ++r) {
    if (visited[r]) continue;
    DoubleCoset coset{lehmer_unrank(n, r), 0};
    visited[r] = true;
    queue.push_back(coset.rep);
    while (!queue.empty()) {
      const Permutation sigma = std::move(queue.front());
      queue.pop_front();
      ++coset.size;
      auto visit = [&](Permutation next) {
        const auto rank = lehmer_rank(next);
        if (visited[rank]) return;
        visited[rank] = true;
        queue.push_back(std::move(next));
      };
      for (const auto& g : left.generators()) visit(g * sigma);
      for (const auto& h : right.generators()) visit(sigma * h);
    }
    out.push_back(std::move(coset));
  }
  return out;
}

std::vector<Permutation> double_coset_reps(const PermGroup& left, const PermGroup& right) {
  std::vector<Permutation> reps;
  for (auto& c : double_cosets(left, right)) reps.push_back(std::move(c.rep));
  return reps;
}

}  // namespace hz
