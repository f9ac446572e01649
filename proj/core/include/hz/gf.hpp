#pragma once

// Dense vectors, matrices and linear codes over F2 and F3.
//
// A LinearCode always stores the reduced row echelon basis of its row space
// with zero rows removed, so two codes compare equal exactly when they span
// the same subspace.

#include "hz/field.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hz {

/// Default cap on p^k for codeword enumeration (3^12).
inline constexpr std::uint64_t kDefaultCodewordBudget = 531441;

class Vector {
 public:
  Vector(Prime p, std::size_t length);
  /// Coordinates are reduced mod p.
  Vector(Prime p, std::span<const int> coords);
  Vector(Prime p, std::initializer_list<int> coords);

  /// Parses a digit string such as "1021". Throws Error(ParseError).
  static Vector parse(Prime p, std::string_view digits);

  Prime prime() const noexcept { return p_; }
  std::size_t size() const noexcept { return coords_.size(); }
  Scalar operator[](std::size_t i) const noexcept { return coords_[i]; }
  void set(std::size_t i, Scalar value) noexcept { coords_[i] = reduce(p_, value); }
  std::span<const Scalar> coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  std::size_t weight() const noexcept;
  std::string str() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector scaled(Scalar s) const;

  friend Vector operator+(Vector l, const Vector& r) { return l += r; }
  friend Vector operator-(Vector l, const Vector& r) { return l -= r; }

  friend bool operator==(const Vector&, const Vector&) = default;
  friend auto operator<=>(const Vector& l, const Vector& r) {
    if (auto c = l.p_ <=> r.p_; c != 0) return c;
    return l.coords_ <=> r.coords_;
  }

 private:
  Prime p_;
  std::vector<Scalar> coords_;
};

/// Euclidean dot product. Throws Error(DimensionMismatch).
Scalar dot(const Vector& x, const Vector& y);

struct Matrix {
  Prime p;
  std::size_t cols = 0;
  std::vector<Vector> rows;

  static Matrix identity(Prime p, std::size_t n);
  std::size_t row_count() const noexcept { return rows.size(); }
  Scalar at(std::size_t r, std::size_t c) const { return rows[r][c]; }
};

/// x * M for a row vector x.
Vector row_times(const Vector& x, const Matrix& m);
Matrix multiply(const Matrix& lhs, const Matrix& rhs);
Matrix transpose(const Matrix& m);

class LinearCode {
 public:
  static LinearCode zero(Prime p, std::size_t n);
  static LinearCode full(Prime p, std::size_t n);
  /// Row space of the given vectors. Throws Error(DimensionMismatch) when a
  /// row has the wrong field or length.
  static LinearCode span(Prime p, std::size_t n, std::span<const Vector> rows);
  static LinearCode span(Prime p, std::size_t n, std::initializer_list<Vector> rows);

  Prime prime() const noexcept { return p_; }
  std::size_t length() const noexcept { return n_; }
  std::size_t dim() const noexcept { return gen_.size(); }
  const std::vector<Vector>& generator() const noexcept { return gen_; }
  std::vector<std::size_t> pivots() const;

  bool is_zero() const noexcept { return gen_.empty(); }
  bool is_full() const noexcept { return gen_.size() == n_; }

  /// p^dim.
  BigInt cardinality() const;

  /// Throws Error(DimensionMismatch).
  bool contains(const Vector& v) const;
  bool contains(const LinearCode& other) const;

  /// All p^k codewords, ordered lexicographically by message (first message
  /// symbol most significant). Throws Error(BudgetExceeded) if p^k > budget.
  std::vector<Vector> codewords(std::uint64_t budget = kDefaultCodewordBudget) const;

  friend bool operator==(const LinearCode&, const LinearCode&) = default;
  friend auto operator<=>(const LinearCode& l, const LinearCode& r) {
    if (auto c = l.p_ <=> r.p_; c != 0) return c;
    if (auto c = l.n_ <=> r.n_; c != 0) return c;
    if (auto c = l.gen_.size() <=> r.gen_.size(); c != 0) return c;
    return l.gen_ <=> r.gen_;
  }

 private:
  friend LinearCode rref(const Matrix& m);
  LinearCode(Prime p, std::size_t n, std::vector<Vector> gen)
      : p_(p), n_(n), gen_(std::move(gen)) {}

  Prime p_;
  std::size_t n_;
  std::vector<Vector> gen_;
};

/// Canonical code of the row space of m (reduced row echelon form, zero rows
/// dropped).
LinearCode rref(const Matrix& m);

Matrix to_matrix(const LinearCode& code);

/// {y : G * gram * y^T = 0} where G is the code's generator.
/// Throws Error(DimensionMismatch).
LinearCode nullspace_wrt(const LinearCode& code, const Matrix& gram);

/// Euclidean dual.
LinearCode euclidean_dual(const LinearCode& code);

LinearCode intersect(const LinearCode& lhs, const LinearCode& rhs);
LinearCode sum(const LinearCode& lhs, const LinearCode& rhs);

/// Every k-dimensional subspace of F_p^n in canonical order (pivot sets
/// lexicographic, then free entries lexicographic). Throws
/// Error(BudgetExceeded) when the number of reduced echelon matrices to
/// visit exceeds budget.
std::vector<LinearCode> all_subspaces(Prime p, std::size_t n, std::size_t k,
                                      std::uint64_t budget = 1u << 22);

/// Subspaces of every dimension 0..n.
std::vector<LinearCode> all_subspaces_any_dim(Prime p, std::size_t n, std::uint64_t budget = 1u << 22);

}  // namespace hz
