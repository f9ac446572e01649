#include "hz/gf.hpp"

#include "hz/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hz {

namespace {

void require_same_shape(const Vector& x, const Vector& y, const char* what) {
  if (x.prime() != y.prime() || x.size() != y.size())
    throw Error(Errc::DimensionMismatch,
                std::string(what) + ": vectors over F" + std::string(to_string(x.prime())) + "^" +
                    std::to_string(x.size()) + " and F" + std::string(to_string(y.prime())) + "^" +
                    std::to_string(y.size()));
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// Brings rows into reduced row echelon form in place and drops zero rows.
void echelonize(Prime p, std::size_t cols, std::vector<Vector>& rows) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    if (rows[rank][col] != 1) rows[rank] = rows[rank].scaled(inv(p, rows[rank][col]));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      rows[r] -= rows[rank].scaled(rows[r][col]);
    }
    ++rank;
  }
  rows.resize(rank, Vector(p, cols));
}

}  // namespace

Vector::Vector(Prime p, std::size_t length) : p_(p), coords_(length, 0) {}

Vector::Vector(Prime p, std::span<const int> coords) : p_(p), coords_(coords.size()) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords_[i] = reduce(p, coords[i]);
}

Vector::Vector(Prime p, std::initializer_list<int> coords)
    : Vector(p, std::span<const int>(coords.begin(), coords.size())) {}

Vector Vector::parse(Prime p, std::string_view digits) {
  Vector v(p, digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char ch = digits[i];
    if (ch < '0' || ch >= static_cast<char>('0' + modulus(p)))
      throw Error(Errc::ParseError, "invalid F" + std::string(to_string(p)) + " digit '" +
                                        std::string(1, ch) + "' in '" + std::string(digits) + "'");
    v.coords_[i] = static_cast<Scalar>(ch - '0');
  }
  return v;
}

bool Vector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Scalar s) { return s == 0; });
}

std::size_t Vector::weight() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(coords_.begin(), coords_.end(), [](Scalar s) { return s != 0; }));
}

std::string Vector::str() const {
  std::string s(coords_.size(), '0');
  for (std::size_t i = 0; i < coords_.size(); ++i) s[i] = static_cast<char>('0' + coords_[i]);
  return s;
}

Vector& Vector::operator+=(const Vector& other) {
  require_same_shape(*this, other, "vector addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = add(p_, coords_[i], other.coords_[i]);
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  require_same_shape(*this, other, "vector subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = sub(p_, coords_[i], other.coords_[i]);
  return *this;
}

Vector Vector::scaled(Scalar s) const {
  Vector r(*this);
  s = reduce(p_, s);
  for (auto& c : r.coords_) c = mul(p_, c, s);
  return r;
}

Scalar dot(const Vector& x, const Vector& y) {
  require_same_shape(x, y, "dot product");
  unsigned acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += unsigned{x[i]} * y[i];
  return static_cast<Scalar>(acc % modulus(x.prime()));
}

Matrix Matrix::identity(Prime p, std::size_t n) {
  Matrix m{p, n, {}};
  m.rows.assign(n, Vector(p, n));
  for (std::size_t i = 0; i < n; ++i) m.rows[i].set(i, 1);
  return m;
}

Vector row_times(const Vector& x, const Matrix& m) {
  if (x.prime() != m.p || x.size() != m.rows.size())
    throw Error(Errc::DimensionMismatch, "row vector of length " + std::to_string(x.size()) +
                                             " times matrix with " + std::to_string(m.rows.size()) +
                                             " rows");
  Vector r(m.p, m.cols);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) r += m.rows[i].scaled(x[i]);
  return r;
}

Matrix multiply(const Matrix& lhs, const Matrix& rhs) {
  Matrix out{lhs.p, rhs.cols, {}};
  out.rows.reserve(lhs.rows.size());
  for (const auto& row : lhs.rows) out.rows.push_back(row_times(row, rhs));
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix t{m.p, m.rows.size(), {}};
  t.rows.assign(m.cols, Vector(m.p, m.rows.size()));
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols; ++c) t.rows[c].set(r, m.rows[r][c]);
  return t;
}

LinearCode LinearCode::zero(Prime p, std::size_t n) { return LinearCode(p, n, {}); }

LinearCode LinearCode::full(Prime p, std::size_t n) { return LinearCode(p, n, Matrix::identity(p, n).rows); }

LinearCode LinearCode::span(Prime p, std::size_t n, std::span<const Vector> rows) {
  return rref(Matrix{p, n, std::vector<Vector>(rows.begin(), rows.end())});
}

LinearCode LinearCode::span(Prime p, std::size_t n, std::initializer_list<Vector> rows) {
  return span(p, n, std::span<const Vector>(rows.begin(), rows.size()));
}

std::vector<std::size_t> LinearCode::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(gen_.size());
  for (const auto& row : gen_) {
    std::size_t j = 0;
    while (row[j] == 0) ++j;
    out.push_back(j);
  }
  return out;
}

BigInt LinearCode::cardinality() const { return ipow(modulus(p_), static_cast<unsigned>(gen_.size())); }

bool LinearCode::contains(const Vector& v) const {
  if (v.prime() != p_ || v.size() != n_)
    throw Error(Errc::DimensionMismatch, "membership test of a length-" + std::to_string(v.size()) +
                                             " vector in a length-" + std::to_string(n_) + " code");
  Vector rest = v;
  const auto piv = pivots();
  for (std::size_t i = 0; i < gen_.size(); ++i)
    if (rest[piv[i]] != 0) rest -= gen_[i].scaled(rest[piv[i]]);
  return rest.is_zero();
}

bool LinearCode::contains(const LinearCode& other) const {
  return std::all_of(other.gen_.begin(), other.gen_.end(), [this](const Vector& g) { return contains(g); });
}

std::vector<Vector> LinearCode::codewords(std::uint64_t budget) const {
  const std::uint64_t q = modulus(p_);
  const std::uint64_t total = saturating_pow(q, gen_.size(), budget);
  if (total > budget)
    throw Error(Errc::BudgetExceeded, std::to_string(q) + "^" + std::to_string(gen_.size()) +
                                          " codewords exceed the budget of " + std::to_string(budget));
  std::vector<Vector> out;
  out.reserve(total);
  const std::size_t k = gen_.size();
  std::vector<Scalar> message(k, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = k; i-- > 0;) {
      message[i] = static_cast<Scalar>(rest % q);
      rest /= q;
    }
    Vector w(p_, n_);
    for (std::size_t i = 0; i < k; ++i)
      if (message[i] != 0) w += gen_[i].scaled(message[i]);
    out.push_back(std::move(w));
  }
  return out;
}

LinearCode rref(const Matrix& m) {
  for (const auto& row : m.rows)
    if (row.prime() != m.p || row.size() != m.cols)
      throw Error(Errc::DimensionMismatch, "matrix row '" + row.str() + "' does not have length " +
                                               std::to_string(m.cols) + " over F" +
                                               std::string(to_string(m.p)));
  std::vector<Vector> rows = m.rows;
  echelonize(m.p, m.cols, rows);
  return LinearCode(m.p, m.cols, std::move(rows));
}

Matrix to_matrix(const LinearCode& code) { return Matrix{code.prime(), code.length(), code.generator()}; }

LinearCode nullspace_wrt(const LinearCode& code, const Matrix& gram) {
  const std::size_t n = code.length();
  if (gram.p != code.prime() || gram.cols != n || gram.rows.size() != n)
    throw Error(Errc::DimensionMismatch, "gram matrix does not match a length-" + std::to_string(n) + " code");
  const Prime p = code.prime();
  const LinearCode constraints = rref(multiply(to_matrix(code), gram));
  const auto piv = constraints.pivots();
  std::vector<bool> is_pivot(n, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector y(p, n);
    y.set(f, 1);
    for (std::size_t i = 0; i < piv.size(); ++i) y.set(piv[i], neg(p, constraints.generator()[i][f]));
    basis.push_back(std::move(y));
  }
  return LinearCode::span(p, n, basis);
}

LinearCode euclidean_dual(const LinearCode& code) {
  return nullspace_wrt(code, Matrix::identity(code.prime(), code.length()));
}

LinearCode sum(const LinearCode& lhs, const LinearCode& rhs) {
  if (lhs.prime() != rhs.prime() || lhs.length() != rhs.length())
    throw Error(Errc::DimensionMismatch, "sum of codes with different shapes");
  std::vector<Vector> rows = lhs.generator();
  rows.insert(rows.end(), rhs.generator().begin(), rhs.generator().end());
  return LinearCode::span(lhs.prime(), lhs.length(), rows);
}

LinearCode intersect(const LinearCode& lhs, const LinearCode& rhs) {
  if (lhs.prime() != rhs.prime() || lhs.length() != rhs.length())
    throw Error(Errc::DimensionMismatch, "intersection of codes with different shapes");
  // Both memberships at once: y is annihilated by the stacked parity checks.
  return euclidean_dual(sum(euclidean_dual(lhs), euclidean_dual(rhs)));
}

std::vector<LinearCode> all_subspaces(Prime p, std::size_t n, std::size_t k, std::uint64_t budget) {
  if (k > n) return {};
  const std::uint64_t q = modulus(p);

  std::vector<std::vector<std::size_t>> pivot_sets;
  std::vector<std::size_t> combo(k);
  std::iota(combo.begin(), combo.end(), std::size_t{0});
  std::uint64_t total = 0;
  while (true) {
    std::size_t free_count = 0;
    for (std::size_t i = 0; i < k; ++i) free_count += (n - combo[i] - 1) - (k - i - 1);
    total += saturating_pow(q, free_count, budget);
    if (total > budget)
      throw Error(Errc::BudgetExceeded, "more than " + std::to_string(budget) + " subspaces of dimension " +
                                            std::to_string(k) + " in F" + std::string(to_string(p)) +
                                            "^" + std::to_string(n));
    pivot_sets.push_back(combo);
    std::size_t i = k;
    while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }

  std::vector<LinearCode> out;
  out.reserve(total);
  for (const auto& pivots : pivot_sets) {
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> slots;  // (row, column)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = pivots[i] + 1; c < n; ++c)
        if (!is_pivot[c]) slots.emplace_back(i, c);
    std::vector<Scalar> fill(slots.size(), 0);
    while (true) {
      std::vector<Vector> rows(k, Vector(p, n));
      for (std::size_t i = 0; i < k; ++i) rows[i].set(pivots[i], 1);
      for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first].set(slots[s].second, fill[s]);
      out.push_back(LinearCode::span(p, n, rows));
      std::size_t s = slots.size();
      while (s > 0 && fill[s - 1] == q - 1) fill[--s] = 0;
      if (s == 0) break;
      ++fill[s - 1];
    }
  }
  return out;
}

std::vector<LinearCode> all_subspaces_any_dim(Prime p, std::size_t n, std::uint64_t budget) {
  std::vector<LinearCode> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto part = all_subspaces(p, n, k, budget - std::min<std::uint64_t>(budget, out.size()));
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace hz
