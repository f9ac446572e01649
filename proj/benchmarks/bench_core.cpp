#include <benchmark/benchmark.h>

#include "hz/classify.hpp"
#include "hz/code.hpp"
#include "hz/group.hpp"
#include "hz/symplectic.hpp"

#include <random>

using namespace hz;

namespace {

LinearCode random_code(std::mt19937& rng, Prime p, std::size_t n, std::size_t rows) {
  std::uniform_int_distribution<int> coef(0, static_cast<int>(modulus(p)) - 1);
  std::vector<Vector> gen;
  for (std::size_t r = 0; r < rows; ++r) {
    Vector v(p, n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, static_cast<Scalar>(coef(rng)));
    gen.push_back(v);
  }
  return LinearCode::span(p, n, gen);
}

LinearCode lagrangian_pairs(std::size_t n) {
  std::vector<Vector> gen;
  for (std::size_t i = 0; i < n / 2; ++i) {
    Vector v(Prime::Two, n);
    v.set(i, 1);
    v.set(i + n / 2, 1);
    gen.push_back(v);
  }
  return LinearCode::span(Prime::Two, n, gen);
}

void BM_RrefTernary(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  const auto code = random_code(rng, Prime::Three, n, n / 2);
  std::vector<Vector> rows = code.generator();
  for (auto _ : state) benchmark::DoNotOptimize(LinearCode::span(Prime::Three, n, rows));
}
BENCHMARK(BM_RrefTernary)->Arg(8)->Arg(16)->Arg(32);

void BM_EnumerateIsotropic(benchmark::State& state) {
  const auto p = state.range(0) == 2 ? Prime::Two : Prime::Three;
  const auto m = static_cast<std::size_t>(state.range(1));
  const SymplecticSpace space(p, m);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_isotropic(space, m));
}
BENCHMARK(BM_EnumerateIsotropic)->Args({2, 2})->Args({2, 3})->Args({3, 2});

void BM_HzDual(benchmark::State& state) {
  std::mt19937 rng(2);
  const auto code = HzCode::build(RingId::H32, random_code(rng, Prime::Two, 8, 3), random_code(rng, Prime::Three, 8, 4));
  for (auto _ : state) benchmark::DoNotOptimize(dual(code));
}
BENCHMARK(BM_HzDual);

void BM_AutomorphismGroup(benchmark::State& state) {
  const auto code = lagrangian_pairs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(code));
}
BENCHMARK(BM_AutomorphismGroup)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_DoubleCosets(benchmark::State& state) {
  const auto g = automorphism_group(lagrangian_pairs(8));
  const auto h = automorphism_group(
      LinearCode::span(Prime::Three, 8, {Vector::parse(Prime::Three, "11100000"), Vector::parse(Prime::Three, "00011210")}));
  for (auto _ : state) benchmark::DoNotOptimize(double_cosets(g, h));
}
BENCHMARK(BM_DoubleCosets)->Unit(benchmark::kMillisecond);

void BM_ClassifyLength4(benchmark::State& state) {
  const auto ring = state.range(0) == 0 ? RingId::H23 : RingId::H32;
  const auto lists = component_lists(ring, 4, Target::SO);
  for (auto _ : state) benchmark::DoNotOptimize(classify(ring, lists.binary, lists.ternary, Target::SO));
}
BENCHMARK(BM_ClassifyLength4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
