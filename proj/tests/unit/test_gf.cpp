#include <doctest.h>

#include "hz/error.hpp"
#include "hz/gf.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace hz;

namespace {

template <class F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an hz::Error");
  return Errc::VerificationFailed;
}

LinearCode code2(std::initializer_list<const char*> rows, std::size_t n) {
  std::vector<Vector> v;
  for (auto r : rows) v.push_back(Vector::parse(Prime::Two, r));
  return LinearCode::span(Prime::Two, n, v);
}

LinearCode code3(std::initializer_list<const char*> rows, std::size_t n) {
  std::vector<Vector> v;
  for (auto r : rows) v.push_back(Vector::parse(Prime::Three, r));
  return LinearCode::span(Prime::Three, n, v);
}

std::vector<std::string> gen_strings(const LinearCode& c) {
  std::vector<std::string> out;
  for (const auto& r : c.generator()) out.push_back(r.str());
  return out;
}

// Number of k-dimensional subspaces of F_p^n.
std::uint64_t gaussian_binomial(unsigned p, unsigned n, unsigned k) {
  std::uint64_t num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= oracle::ipow(p, n - i) - 1;
    den *= oracle::ipow(p, i + 1) - 1;
  }
  return num / den;
}

}  // namespace

TEST_CASE("vectors reduce and parse") {
  Vector v(Prime::Three, {4, -1, 2});
  CHECK(v.str() == "122");
  CHECK(Vector::parse(Prime::Two, "0110").weight() == 2);
  CHECK(error_of([] { (void)Vector::parse(Prime::Two, "012"); }) == Errc::ParseError);
  CHECK(error_of([] { (void)Vector::parse(Prime::Three, "1x"); }) == Errc::ParseError);
  CHECK((Vector::parse(Prime::Three, "12") + Vector::parse(Prime::Three, "22")).str() == "01");
  CHECK(Vector::parse(Prime::Three, "12").scaled(2).str() == "21");
  CHECK(dot(Vector::parse(Prime::Three, "111"), Vector::parse(Prime::Three, "121")) == 1);
  CHECK(error_of([] { (void)dot(Vector(Prime::Two, 2), Vector(Prime::Two, 3)); }) == Errc::DimensionMismatch);
}

TEST_CASE("rref drops zero rows and normalizes pivots") {
  CHECK(gen_strings(code2({"11", "00"}, 2)) == std::vector<std::string>{"11"});
  CHECK(gen_strings(code2({"10", "11"}, 2)) == std::vector<std::string>{"10", "01"});
  CHECK(gen_strings(code3({"21"}, 2)) == std::vector<std::string>{"12"});
  CHECK(code2({"11", "00"}, 2).dim() == 1);

  const auto c = code3({"1202", "2111", "0012"}, 4);
  CHECK(rref(to_matrix(c)) == c);
  const auto pivots = c.pivots();
  for (std::size_t r = 0; r < c.dim(); ++r) {
    CHECK(c.generator()[r][pivots[r]] == 1);
    for (std::size_t q = 0; q < c.dim(); ++q)
      if (q != r) CHECK(c.generator()[q][pivots[r]] == 0);
  }
}

TEST_CASE("membership") {
  CHECK(code2({"11"}, 2).contains(Vector::parse(Prime::Two, "11")));
  CHECK_FALSE(code2({"11"}, 2).contains(Vector::parse(Prime::Two, "10")));
  CHECK(code3({"12"}, 2).contains(Vector::parse(Prime::Three, "21")));
  CHECK(error_of([] { (void)code2({"11"}, 2).contains(Vector(Prime::Two, 3)); }) == Errc::DimensionMismatch);
  CHECK(error_of([] { (void)code2({"11"}, 2).contains(Vector(Prime::Three, 2)); }) == Errc::DimensionMismatch);
  CHECK(LinearCode::full(Prime::Three, 3).contains(code3({"120"}, 3)));
  CHECK_FALSE(code3({"120"}, 3).contains(LinearCode::full(Prime::Three, 3)));
}

TEST_CASE("codeword enumeration") {
  const auto words = code2({"11"}, 2).codewords();
  REQUIRE(words.size() == 2);
  CHECK(words[0].str() == "00");
  CHECK(words[1].str() == "11");
  CHECK(LinearCode::full(Prime::Three, 2).codewords().size() == 9);
  CHECK(code2({"10", "01"}, 2).codewords().size() == 4);
  CHECK(LinearCode::zero(Prime::Three, 4).codewords().size() == 1);
  CHECK(error_of([] { (void)LinearCode::full(Prime::Three, 6).codewords(100); }) == Errc::BudgetExceeded);
}

TEST_CASE("membership agrees with enumeration on every subspace of small spaces") {
  for (auto [p, n] : {std::pair{Prime::Two, std::size_t{4}}, std::pair{Prime::Three, std::size_t{3}}}) {
    const auto everything = LinearCode::full(p, n).codewords();
    for (const auto& code : all_subspaces_any_dim(p, n)) {
      const auto words = code.codewords();
      std::set<Vector> inside(words.begin(), words.end());
      CHECK(inside.size() == words.size());
      for (const auto& v : everything) CHECK(code.contains(v) == (inside.count(v) == 1));
    }
  }
}

TEST_CASE("nullspace with respect to a gram matrix") {
  const auto id2 = Matrix::identity(Prime::Two, 2);
  CHECK(nullspace_wrt(code2({"11"}, 2), id2) == code2({"11"}, 2));
  CHECK(nullspace_wrt(LinearCode::full(Prime::Two, 2), id2).is_zero());
  CHECK(gen_strings(nullspace_wrt(code3({"111"}, 3), Matrix::identity(Prime::Three, 3))) ==
        std::vector<std::string>{"102", "012"});
  CHECK(error_of([&] { (void)nullspace_wrt(code2({"11"}, 2), Matrix::identity(Prime::Two, 3)); }) ==
        Errc::DimensionMismatch);
}

TEST_CASE("canonical form does not depend on the spanning set") {
  std::mt19937 rng(7);
  for (auto p : {Prime::Two, Prime::Three}) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto code = oracle::random_code(rng, p, 5);
      auto rows = code.codewords();
      std::shuffle(rows.begin(), rows.end(), rng);
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(rows.size(), code.dim() + 3)), rows.end());
      std::vector<Vector> spanning = code.generator();
      spanning.insert(spanning.end(), rows.begin(), rows.end());
      std::shuffle(spanning.begin(), spanning.end(), rng);
      CHECK(LinearCode::span(p, 5, spanning) == code);
    }
  }
}

TEST_CASE("rank plus nullity equals length for invertible grams") {
  std::mt19937 rng(11);
  for (auto p : {Prime::Two, Prime::Three}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto code = oracle::random_code(rng, p, 6);
      CHECK(code.dim() + euclidean_dual(code).dim() == 6);
      CHECK(euclidean_dual(euclidean_dual(code)) == code);
    }
  }
}

TEST_CASE("intersection and sum") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = oracle::random_code(rng, Prime::Three, 4);
    const auto y = oracle::random_code(rng, Prime::Three, 4);
    const auto meet = intersect(x, y);
    const auto join = sum(x, y);
    CHECK(meet.dim() + join.dim() == x.dim() + y.dim());
    CHECK(x.contains(meet));
    CHECK(y.contains(meet));
    CHECK(join.contains(x));
    CHECK(join.contains(y));
    for (const auto& v : LinearCode::full(Prime::Three, 4).codewords())
      CHECK(meet.contains(v) == (x.contains(v) && y.contains(v)));
  }
}

TEST_CASE("subspace enumeration counts match Gaussian binomials") {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      for (auto p : {Prime::Two, Prime::Three}) {
        const auto list = all_subspaces(p, n, k);
        CHECK(list.size() == gaussian_binomial(modulus(p), n, k));
        CHECK(std::set<LinearCode>(list.begin(), list.end()).size() == list.size());
        for (const auto& c : list) CHECK(c.dim() == k);
      }
    }
}
