#include <doctest.h>

#include "hz/classify.hpp"
#include "hz/error.hpp"
#include "hz/symplectic.hpp"
#include "oracle.hpp"

#include <map>
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

LinearCode lc(Prime p, std::size_t n, std::initializer_list<const char*> rows) {
  std::vector<Vector> v;
  for (auto r : rows) v.push_back(Vector::parse(p, r));
  return LinearCode::span(p, n, v);
}

std::vector<LinearCode> worked_binary() { return {lc(Prime::Two, 2, {"10"}), lc(Prime::Two, 2, {"11"})}; }
std::vector<LinearCode> worked_ternary() {
  return {lc(Prime::Three, 2, {"10"}), lc(Prime::Three, 2, {"11"}), lc(Prime::Three, 2, {"12"})};
}

std::vector<Permutation> all_perms(std::size_t n) {
  std::vector<Permutation> out;
  for (std::uint64_t r = 0; r < factorial(n); ++r) out.push_back(lehmer_unrank(n, r));
  return out;
}

// Number of permutation classes of H_z-codes of length n that contain at
// least one code with the target property, counted by marking whole orbits
// over every component pair. Predicates come from flags(), which test_code
// checks against the set definitions.
std::size_t brute_class_count(RingId ring, std::size_t n, Target target) {
  const auto binary = all_subspaces_any_dim(Prime::Two, n);
  const auto ternary = all_subspaces_any_dim(Prime::Three, n);
  const auto perms = all_perms(n);
  std::set<std::pair<LinearCode, LinearCode>> seen;
  std::size_t classes = 0;
  for (const auto& ca : binary)
    for (const auto& cb : ternary) {
      const auto code = HzCode::build(ring, ca, cb);
      const auto f = flags(code);
      const bool hit = target == Target::SO ? f.so : (target == Target::QSD ? f.qsd : f.sd);
      if (!hit || seen.contains({ca, cb})) continue;
      ++classes;
      for (const auto& pi : perms) seen.insert({apply_perm(pi, ca), apply_perm(pi, cb)});
    }
  return classes;
}

constexpr RingId kRings[] = {RingId::H23, RingId::H32};
constexpr Target kTargets[] = {Target::SO, Target::QSD, Target::SD};

}  // namespace

TEST_CASE("target names round-trip") {
  for (auto t : kTargets) CHECK(parse_target(to_string(t)) == t);
  CHECK_FALSE(parse_target("LCD").has_value());
}

TEST_CASE("worked length-2 example") {
  const auto la = worked_binary();
  const auto lb = worked_ternary();
  const auto result = classify(RingId::H23, la, lb, Target::SO);
  REQUIRE(result.records.size() == 7);

  std::vector<std::size_t> counts;
  for (const auto& p : result.pairs) counts.push_back(p.count);
  CHECK(counts == std::vector<std::size_t>{2, 1, 1, 1, 1, 1});

  std::map<std::size_t, std::uint64_t> aut_a, aut_b;
  for (const auto& p : result.pairs) {
    aut_a[p.ca_id] = p.aut_a_order;
    aut_b[p.cb_id] = p.aut_b_order;
  }
  CHECK(aut_a == std::map<std::size_t, std::uint64_t>{{0, 1}, {1, 2}});
  CHECK(aut_b == std::map<std::size_t, std::uint64_t>{{0, 1}, {1, 2}, {2, 2}});

  auto code = [](const char* a, const char* b) {
    return HzCode::build(RingId::H23, lc(Prime::Two, 2, {a}), lc(Prime::Three, 2, {b}));
  };
  const std::set<HzCode> expected{code("10", "10"), code("10", "01"), code("10", "11"), code("10", "12"),
                                  code("11", "10"), code("11", "11"), code("11", "12")};
  std::set<HzCode> realized;
  for (const auto& rec : result.records) {
    realized.insert(realize(rec, la, lb));
    CHECK(rec.flags.so);
    CHECK(rec.cardinality == 6);
  }
  CHECK(realized == expected);
  CHECK(verify_classification(result.records, RingId::H23, la, lb, Target::SO).ok());
}

TEST_CASE("single self-dual pair at length 2") {
  const std::vector<LinearCode> la{lc(Prime::Two, 2, {"11"})};
  const std::vector<LinearCode> lb{LinearCode::full(Prime::Three, 2)};
  const auto result = classify(RingId::H23, la, lb, Target::SD);
  REQUIRE(result.records.size() == 1);
  CHECK(result.records[0].flags.sd);
}

TEST_CASE("H32 quasi self-dual classification at length 2 is not empty") {
  const auto lists = component_lists(RingId::H32, 2, Target::QSD);
  const auto result = classify(RingId::H32, lists.binary, lists.ternary, Target::QSD);
  CHECK(result.records.size() == 7);
  CHECK(result.records.size() == brute_class_count(RingId::H32, 2, Target::QSD));
  CHECK(verify_classification(result.records, RingId::H32, lists.binary, lists.ternary, Target::QSD).ok());
}

TEST_CASE("empty lists give an empty classification") {
  const std::vector<LinearCode> none;
  CHECK(classify(RingId::H23, worked_binary(), none, Target::SO).records.empty());
  CHECK(classify(RingId::H32, none, worked_ternary(), Target::SO).records.empty());
}

TEST_CASE("record count per pair equals the double coset count") {
  const auto lists = component_lists(RingId::H23, 4, Target::SO);
  const auto result = classify(RingId::H23, lists.binary, lists.ternary, Target::SO);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> per_pair;
  for (const auto& rec : result.records) ++per_pair[{rec.ca_id, rec.cb_id}];
  for (const auto& p : result.pairs) {
    const auto g = automorphism_group(lists.binary[p.ca_id]);
    const auto h = automorphism_group(lists.ternary[p.cb_id]);
    CHECK(p.count == double_coset_reps(g, h).size());
    CHECK(per_pair[{p.ca_id, p.cb_id}] == p.count);
  }
}

TEST_CASE("classification totals match an independent orbit count") {
  for (auto ring : kRings)
    for (auto target : kTargets)
      for (std::size_t n : {2u, 4u}) {
        CAPTURE(to_string(ring));
        CAPTURE(to_string(target));
        CAPTURE(n);
        const auto lists = component_lists(ring, n, target);
        const auto result = classify(ring, lists.binary, lists.ternary, target);
        CHECK(result.records.size() == brute_class_count(ring, n, target));
      }
}

TEST_CASE("verification passes for every target at lengths 2 and 4") {
  for (auto ring : kRings)
    for (auto target : kTargets)
      for (std::size_t n : {2u, 4u}) {
        CAPTURE(to_string(ring));
        CAPTURE(to_string(target));
        CAPTURE(n);
        const auto lists = component_lists(ring, n, target);
        const auto result = classify(ring, lists.binary, lists.ternary, target);
        const auto report = verify_classification(result.records, ring, lists.binary, lists.ternary, target);
        CHECK(report.ok());
        CHECK(report.problems.empty());
        for (const auto& rec : result.records) CHECK(satisfies(realize(rec, lists.binary, lists.ternary), target));
      }
}

TEST_CASE("mutated record lists are rejected") {
  for (auto ring : kRings) {
    CAPTURE(to_string(ring));
    const auto lists = component_lists(ring, 4, Target::SO);
    const auto result = classify(ring, lists.binary, lists.ternary, Target::SO);
    const auto& la = lists.binary;
    const auto& lb = lists.ternary;

    auto dropped = result.records;
    dropped.erase(dropped.begin() + static_cast<std::ptrdiff_t>(dropped.size() / 2));
    const auto r1 = verify_classification(dropped, ring, la, lb, Target::SO);
    CHECK_FALSE(r1.complete);
    CHECK_FALSE(r1.ok());

    // Duplicate a record under another member of its double coset.
    bool duplicated = false;
    for (const auto& rec : result.records) {
      const auto fixed = automorphism_group(ring == RingId::H23 ? la[rec.ca_id] : lb[rec.cb_id]);
      for (const auto& g : fixed.elements()) {
        const auto other = g * rec.sigma;
        if (other == rec.sigma) continue;
        auto dup = result.records;
        auto copy = rec;
        copy.sigma = other;
        dup.push_back(copy);
        const auto r2 = verify_classification(dup, ring, la, lb, Target::SO);
        CHECK_FALSE(r2.inequivalent);
        CHECK(r2.sound);
        CHECK(r2.complete);
        duplicated = true;
        break;
      }
      if (duplicated) break;
    }
    CHECK(duplicated);

    auto tampered = result.records;
    tampered.front().flags.lcd = !tampered.front().flags.lcd;
    CHECK_FALSE(verify_classification(tampered, ring, la, lb, Target::SO).sound);
  }
}

TEST_CASE("inadmissible pairs are skipped and flagged") {
  const std::vector<LinearCode> la{LinearCode::full(Prime::Two, 2)};
  const auto lb = worked_ternary();
  CHECK(classify(RingId::H23, la, lb, Target::SO).records.empty());
  ClassificationRecord bogus{RingId::H23, 2, 0, 0, Permutation::identity(2), {}, 18};
  const std::vector<ClassificationRecord> records{bogus};
  CHECK_FALSE(verify_classification(records, RingId::H23, la, lb, Target::SO).sound);
}

TEST_CASE("admissibility conditions") {
  const auto sd2 = lc(Prime::Two, 4, {"1010", "0101"});
  const auto sd3 = lc(Prime::Three, 4, {"1010", "0101"});
  const auto half3 = lc(Prime::Three, 4, {"1000", "0100"});
  CHECK(is_self_dual(sd2));
  CHECK(admissible(RingId::H23, Target::SO, sd2, LinearCode::zero(Prime::Three, 4)));
  CHECK(admissible(RingId::H23, Target::QSD, sd2, half3));
  CHECK_FALSE(admissible(RingId::H23, Target::QSD, sd2, LinearCode::full(Prime::Three, 4)));
  CHECK(admissible(RingId::H23, Target::SD, sd2, LinearCode::full(Prime::Three, 4)));
  CHECK(admissible(RingId::H32, Target::SD, LinearCode::full(Prime::Two, 4), sd3));
  CHECK_FALSE(admissible(RingId::H32, Target::SO, LinearCode::zero(Prime::Two, 4), LinearCode::full(Prime::Three, 4)));
}

TEST_CASE("canonical forms are permutation invariant") {
  const auto perms = all_perms(4);
  for (const auto& ca : all_subspaces(Prime::Two, 4, 2))
    for (const auto& pi : perms) CHECK(canonical_form(apply_perm(pi, ca)) == canonical_form(ca));
  const auto code = HzCode::build(RingId::H32, lc(Prime::Two, 4, {"1100"}), lc(Prime::Three, 4, {"1020", "0111"}));
  for (const auto& pi : perms) CHECK(canonical_form(apply_perm(pi, code)) == canonical_form(code));
}

TEST_CASE("inequivalent subspaces of the binary plane") {
  const auto reps = inequivalent_codes(all_subspaces_any_dim(Prime::Two, 2));
  CHECK(reps.size() == 4);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK(canonical_form(reps[i]) != canonical_form(reps[j]));
}

TEST_CASE("component lists") {
  const auto so = component_lists(RingId::H23, 2, Target::SO);
  CHECK(so.binary.size() == 3);   // {0}, <10> up to swap, <11>
  CHECK(so.ternary.size() == 5);  // {0}, <10>, <11>, <12>, full
  const auto sd = component_lists(RingId::H32, 4, Target::SD);
  REQUIRE(sd.binary.size() == 1);
  CHECK(sd.binary[0].is_full());
  for (const auto& c : sd.ternary) CHECK(is_self_dual(c));
  CHECK(error_of([] { (void)component_lists(RingId::H23, 3, Target::SO); }) == Errc::OddLength);
}

TEST_CASE("length guards") {
  const std::vector<LinearCode> a3{LinearCode::zero(Prime::Two, 3)};
  const std::vector<LinearCode> b3{LinearCode::zero(Prime::Three, 3)};
  CHECK(error_of([&] { (void)classify(RingId::H23, a3, b3, Target::SO); }) == Errc::OddLength);
  const std::vector<LinearCode> a10{LinearCode::zero(Prime::Two, 10)};
  const std::vector<LinearCode> b10{LinearCode::zero(Prime::Three, 10)};
  CHECK(error_of([&] { (void)classify(RingId::H23, a10, b10, Target::SO); }) == Errc::BudgetExceeded);
  const std::vector<LinearCode> a8{LinearCode::zero(Prime::Two, 8)};
  const std::vector<LinearCode> b8{LinearCode::zero(Prime::Three, 8)};
  const std::vector<ClassificationRecord> none;
  CHECK(error_of([&] { (void)verify_classification(none, RingId::H23, a8, b8, Target::SO); }) ==
        Errc::BudgetExceeded);
  const std::vector<LinearCode> b2{LinearCode::zero(Prime::Three, 2)};
  CHECK(error_of([&] { (void)classify(RingId::H23, a8, b2, Target::SO); }) == Errc::LengthMismatch);
}
