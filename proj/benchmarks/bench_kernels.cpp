// Wall-time microbenchmarks for the dense kernels and the two solve
// pipelines. Run with --benchmark_filter=... to narrow.
#include <benchmark/benchmark.h>

#include "conjulin/embedding.hpp"
#include "conjulin/generate.hpp"
#include "conjulin/numkernel.hpp"
#include "conjulin/reduction.hpp"

using namespace conjulin;

namespace {

const Tolerance tol;

ComplexMatrix dense_hpd(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const ComplexMatrix g = random_complex_matrix(n, n, rng);
  ComplexMatrix h = g * adjoint(g);
  for (std::size_t i = 0; i < n; ++i) h(i, i) += 1.0;
  return h;
}

void BM_cholesky(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix h = dense_hpd(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(cholesky(h, tol));
}
BENCHMARK(BM_cholesky)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_hermitian_eigenvalues(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const ComplexMatrix h = random_hermitian(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(h, tol));
}
BENCHMARK(BM_hermitian_eigenvalues)->Arg(8)->Arg(16)->Arg(32);

void BM_complement_projector(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  const ComplexMatrix b = random_complex_matrix(2 * n, n, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(orthogonal_complement_projector(b, tol));
}
BENCHMARK(BM_complement_projector)->Arg(8)->Arg(16)->Arg(32);

void BM_solve_conjugate(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const GeneratedSystem gen = gen_reducible(n, 4);
  const ConjugateSystem sys(gen.M, gen.N, gen.p);
  for (auto _ : state) benchmark::DoNotOptimize(solve(sys, tol));
}
BENCHMARK(BM_solve_conjugate)->Arg(4)->Arg(8)->Arg(16);

void BM_solve_real_via_complex(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const GeneratedRealSystem gen = gen_spd(m, 5);
  const RealSystem sys(gen.A, gen.b);
  for (auto _ : state) benchmark::DoNotOptimize(solve_real_via_complex(sys, tol));
}
BENCHMARK(BM_solve_real_via_complex)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
