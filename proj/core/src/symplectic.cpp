#include "hz/symplectic.hpp"

#include "hz/error.hpp"

#include <numeric>
#include <string>

namespace hz {

SymplecticSpace::SymplecticSpace(Prime p, std::size_t half_length)
    : p_(p), m_(half_length), gram_{p, 2 * half_length, {}} {
  const std::size_t n = 2 * m_;
  gram_.rows.assign(n, Vector(p, n));
  for (std::size_t i = 0; i < m_; ++i) {
    gram_.rows[i].set(m_ + i, 1);
    gram_.rows[m_ + i].set(i, neg(p, 1));
  }
}

SymplecticSpace SymplecticSpace::for_length(Prime p, std::size_t n) {
  if (n % 2 != 0)
    throw Error(Errc::OddLength, "symplectic form needs even length, got " + std::to_string(n));
  return SymplecticSpace(p, n / 2);
}

Scalar SymplecticSpace::inner(const Vector& x, const Vector& y) const {
  if (x.prime() != p_ || y.prime() != p_ || x.size() != length() || y.size() != length())
    throw Error(Errc::DimensionMismatch, "symplectic product on F" + std::string(to_string(p_)) + "^" +
                                             std::to_string(length()) + " applied to vectors of length " +
                                             std::to_string(x.size()) + " and " + std::to_string(y.size()));
  int acc = 0;
  for (std::size_t i = 0; i < m_; ++i) acc += int{x[i]} * y[m_ + i] - int{x[m_ + i]} * y[i];
  return reduce(p_, acc);
}

Scalar symplectic_inner(const SymplecticSpace& space, const Vector& x, const Vector& y) {
  return space.inner(x, y);
}

LinearCode symplectic_dual(const SymplecticSpace& space, const LinearCode& code) {
  if (code.prime() != space.prime() || code.length() != space.length())
    throw Error(Errc::DimensionMismatch, "code does not live in this symplectic space");
  return nullspace_wrt(code, space.gram());
}

LinearCode symplectic_dual(const LinearCode& code) { return symplectic_dual(SymplecticSpace::of(code), code); }

bool is_self_orthogonal(const LinearCode& code) {
  const auto space = SymplecticSpace::of(code);
  const auto& g = code.generator();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (space.inner(g[i], g[j]) != 0) return false;
  return true;
}

bool is_self_dual(const LinearCode& code) { return symplectic_dual(code) == code; }

bool is_lcd(const LinearCode& code) { return intersect(code, symplectic_dual(code)).is_zero(); }

BigInt count_isotropic_formula(Prime p, std::size_t m, std::size_t k) {
  if (k > m)
    throw Error(Errc::KOutOfRange, "isotropic dimension " + std::to_string(k) + " exceeds m = " + std::to_string(m));
  const unsigned q = modulus(p);
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < k; ++i) num *= ipow(q, static_cast<unsigned>(2 * m - 2 * i)) - 1;
  for (std::size_t j = 1; j <= k; ++j) den *= ipow(q, static_cast<unsigned>(j)) - 1;
  if (num % den != 0) throw std::logic_error("isotropic count is not an integer");
  return num / den;
}

namespace {

struct IsotropicSearch {
  const SymplecticSpace& space;
  std::size_t n;
  std::size_t k;
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot;
  std::vector<Vector> rows;
  std::vector<LinearCode> out;

  // Assigns the free entries of row i from column `col` onwards.
  void fill(std::size_t i, std::size_t col) {
    if (i == k) {
      out.push_back(LinearCode::span(space.prime(), n, rows));
      return;
    }
    while (col < n && is_pivot[col]) ++col;
    if (col >= n) {
      for (std::size_t j = 0; j < i; ++j)
        if (space.inner(rows[i], rows[j]) != 0) return;
      fill(i + 1, i + 1 < k ? pivots[i + 1] + 1 : n);
      return;
    }
    for (Scalar s = 0; s < modulus(space.prime()); ++s) {
      rows[i].set(col, s);
      fill(i, col + 1);
    }
    rows[i].set(col, 0);
  }
};

}  // namespace

std::vector<LinearCode> enumerate_isotropic(const SymplecticSpace& space, std::size_t k, std::uint64_t budget) {
  const std::size_t m = space.half();
  const std::size_t n = space.length();
  if (k > m)
    throw Error(Errc::KOutOfRange, "isotropic dimension " + std::to_string(k) + " exceeds m = " + std::to_string(m));
  BigInt work = ipow(modulus(space.prime()), static_cast<unsigned>(k * n));
  if (work > budget)
    throw Error(Errc::BudgetExceeded, "isotropic enumeration of dimension " + std::to_string(k) + " in F" +
                                          std::string(to_string(space.prime())) + "^" + std::to_string(n) +
                                          " exceeds the budget of " + std::to_string(budget));

  IsotropicSearch search{space, n, k, std::vector<std::size_t>(k), std::vector<bool>(n, false),
                         std::vector<Vector>(k, Vector(space.prime(), n)), {}};
  std::vector<std::size_t>& combo = search.pivots;
  std::iota(combo.begin(), combo.end(), std::size_t{0});
  while (true) {
    std::fill(search.is_pivot.begin(), search.is_pivot.end(), false);
    for (std::size_t i = 0; i < k; ++i) {
      search.is_pivot[combo[i]] = true;
      search.rows[i] = Vector(space.prime(), n);
      search.rows[i].set(combo[i], 1);
    }
    search.fill(0, k > 0 ? combo[0] + 1 : n);
    std::size_t i = k;
    while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
  return std::move(search.out);
}

}  // namespace hz
