// OpenMP kernels against their serial reference versions.
#include <benchmark/benchmark.h>

#include <random>

#include "macaulay/automorphism.hpp"
#include "macaulay/matrix.hpp"

using namespace macaulay;

namespace {

RationalMatrix random_matrix(std::size_t size) {
  std::mt19937_64 rng(size);
  std::uniform_int_distribution<int> coeff(-50, 50);
  RationalMatrix m(size, size + size / 4);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = coeff(rng);
  return m;
}

TruncatedAutomorphism random_automorphism(std::size_t n, int s) {
  std::mt19937_64 rng(n * 100 + static_cast<std::size_t>(s));
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<JetPolynomial> images;
  for (std::size_t j = 0; j < n; ++j) {
    JetPolynomial f(n, s);
    f.add_term(Exponent::unit(n, j), 1);
    for (int d = 2; d <= s; ++d)
      for (const auto& e : monomials_of_degree(n, d)) f.add_term(e, coeff(rng));
    images.push_back(std::move(f));
  }
  return TruncatedAutomorphism(n, s, std::move(images));
}

void BM_Rref(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_row_echelon(m));
}

void BM_RrefReference(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::reduced_row_echelon(m));
}

void BM_Rank(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}

void BM_RankReference(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::rank(m));
}

void BM_MatrixOf(benchmark::State& state) {
  const auto phi = random_automorphism(static_cast<std::size_t>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(matrix_of(phi));
}

void BM_MatrixOfReference(benchmark::State& state) {
  const auto phi = random_automorphism(static_cast<std::size_t>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::matrix_of(phi));
}

}  // namespace

BENCHMARK(BM_Rref)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RrefReference)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Rank)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RankReference)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MatrixOf)->Args({2, 6})->Args({3, 5})->Args({4, 4})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MatrixOfReference)->Args({2, 6})->Args({3, 5})->Args({4, 4})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
