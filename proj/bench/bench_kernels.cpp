#include <random>

#include <benchmark/benchmark.h>

#include "cqs/linalg.hpp"

using cqs::Exec;
using cqs::Fp;
using cqs::Matrix;

namespace {

Matrix<Fp> random_matrix(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> d(0, Fp::modulus() - 1);
    Matrix<Fp> A(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A(i, j) = Fp(d(rng));
    return A;
}

template <Exec E>
void BM_rref(benchmark::State& st) {
    Fp::ModulusScope scope(32003);
    auto A = random_matrix(static_cast<std::size_t>(st.range(0)), 7);
    for (auto _ : st) {
        auto B = A;
        benchmark::DoNotOptimize(cqs::rref_inplace(B, E));
    }
}

template <Exec E>
void BM_matmul(benchmark::State& st) {
    Fp::ModulusScope scope(32003);
    auto n = static_cast<std::size_t>(st.range(0));
    auto A = random_matrix(n, 1), B = random_matrix(n, 2);
    for (auto _ : st) benchmark::DoNotOptimize(cqs::matmul(A, B, E));
}

}  // namespace

BENCHMARK(BM_rref<Exec::Serial>)->Arg(100)->Arg(200);
BENCHMARK(BM_rref<Exec::Parallel>)->Arg(100)->Arg(200);
BENCHMARK(BM_matmul<Exec::Serial>)->Arg(100)->Arg(200);
BENCHMARK(BM_matmul<Exec::Parallel>)->Arg(100)->Arg(200);

BENCHMARK_MAIN();
