#include "specdist/embedding.hpp"
#include "specdist/gramform.hpp"
#include "specdist/linalg.hpp"
#include "specdist/numtheory.hpp"
#include "specdist/spectral.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace specdist;

void BM_gram_closed_form(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gramform::gram_cyclotomic(n));
}
BENCHMARK(BM_gram_closed_form)->Arg(105)->Arg(210)->Arg(495);

void BM_gram_oracle(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(embedding::gram_oracle_cyclotomic(n));
}
BENCHMARK(BM_gram_oracle)->Arg(105)->Arg(210);

void BM_jacobi_prime_gram(benchmark::State& state) {
    const auto p = static_cast<std::uint64_t>(state.range(0));
    const auto gram = gramform::gram_cyclotomic(p).matrix.to_sym();
    for (auto _ : state) benchmark::DoNotOptimize(linalg::jacobi_eigenvalues(gram));
}
BENCHMARK(BM_jacobi_prime_gram)->Arg(31)->Arg(61)->Arg(97);

void BM_sd_cyclotomic(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(spectral::sd_cyclotomic(n));
}
BENCHMARK(BM_sd_cyclotomic)->Arg(97)->Arg(120)->Arg(199);

void BM_polynomial_roots(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const auto p = numtheory::cyclotomic_coeffs(n);
    for (auto _ : state) benchmark::DoNotOptimize(linalg::polynomial_roots(p));
}
BENCHMARK(BM_polynomial_roots)->Arg(30)->Arg(60)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
