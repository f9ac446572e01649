#include "hz/permutation.hpp"

#include "hz/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace hz {

Permutation::Permutation(std::size_t n) : images_(n) {
  std::iota(images_.begin(), images_.end(), std::uint8_t{0});
}

Permutation Permutation::from_one_line(std::span<const int> images) {
  const std::size_t n = images.size();
  Permutation p(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v - 1)])
      throw Error(Errc::ParseError, "not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v - 1)] = true;
    p.images_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::from_one_line(std::initializer_list<int> images) {
  return from_one_line(std::span<const int>(images.begin(), images.size()));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > n || j > n)
    throw Error(Errc::DimensionMismatch, "transposition point outside 1.." + std::to_string(n));
  Permutation p(n);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(i + 1);
      seen[i] = true;
      first = false;
      i = images_[i];
    } while (i != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw Error(Errc::DimensionMismatch, "composing permutations of different degree");
  Permutation r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r.images_[i] = f.images_[g.images_[i]];
  return r;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

std::uint64_t lehmer_rank(const Permutation& p) {
  const std::size_t n = p.size();
  std::uint64_t rank = 0;
  std::uint32_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t v = p(i);
    const auto smaller_unused = static_cast<std::uint64_t>(v - std::popcount(used & ((1u << v) - 1)));
    rank = rank * (n - i) + smaller_unused;
    used |= 1u << v;
  }
  return rank;
}

Permutation lehmer_unrank(std::size_t n, std::uint64_t rank) {
  std::vector<int> digits(n);
  for (std::size_t i = 1; i <= n; ++i) {
    digits[n - i] = static_cast<int>(rank % i);
    rank /= i;
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i] = pool[static_cast<std::size_t>(digits[i])];
    pool.erase(pool.begin() + digits[i]);
  }
  return Permutation::from_one_line(images);
}

Vector apply_perm(const Permutation& pi, const Vector& v) {
  if (pi.size() != v.size())
    throw Error(Errc::DimensionMismatch, "permutation of degree " + std::to_string(pi.size()) +
                                             " applied to length " + std::to_string(v.size()));
  Vector r(v.prime(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r.set(pi(i), v[i]);
  return r;
}

LinearCode apply_perm(const Permutation& pi, const LinearCode& code) {
  if (pi.size() != code.length())
    throw Error(Errc::DimensionMismatch, "permutation of degree " + std::to_string(pi.size()) +
                                             " applied to a length-" + std::to_string(code.length()) + " code");
  std::vector<Vector> rows;
  rows.reserve(code.dim());
  for (const auto& g : code.generator()) rows.push_back(apply_perm(pi, g));
  return LinearCode::span(code.prime(), code.length(), rows);
}

}  // namespace hz
