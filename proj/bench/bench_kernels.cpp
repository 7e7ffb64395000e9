#include "cliffhopf/braiding.hpp"
#include "cliffhopf/linalg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace cliffhopf;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), pct(0, 99);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (pct(rng) < 40) {
        Scalar s(num(rng), den(rng));
        s.canonicalize();
        m(r, c) = s;
      }
  return m;
}

void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

void BM_MultiplyReference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(reference::multiply(a, b));
}

void BM_RowReduce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n + n / 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(row_reduce(a));
}

void BM_RowReduceReference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n + n / 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(reference::row_reduce(a));
}

// End-to-end: assembling and solving the n = 2 bi-gebra system for σ.
void BM_SolveSigmaRankTwo(benchmark::State& state) {
  Matrix eta(2, 2), xi(2, 2);
  eta(0, 0) = 1;
  eta(0, 1) = Scalar(1, 2);
  xi(1, 1) = -1;
  const CliffordStructure s(2, eta, xi);
  for (auto _ : state) benchmark::DoNotOptimize(solve_sigma(s));
}

} // namespace

BENCHMARK(BM_Multiply)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyReference)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RowReduce)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RowReduceReference)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveSigmaRankTwo)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
