#include <benchmark/benchmark.h>

#include <miep/miep.hpp>

namespace {

miep::Matrix sample_matrix(Eigen::Index n, std::uint64_t seed) {
  miep::Rng rng(seed);
  return miep::random_matrix(rng, n, n);
}

void BM_CharpolyTracePowers(benchmark::State& state) {
  const miep::Matrix m = sample_matrix(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(miep::charpoly(m));
}
BENCHMARK(BM_CharpolyTracePowers)->DenseRange(2, 8, 2);

void BM_CharpolyHessenberg(benchmark::State& state) {
  const miep::Matrix m = sample_matrix(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(miep::charpoly_hessenberg(m));
}
BENCHMARK(BM_CharpolyHessenberg)->DenseRange(2, 8, 2);

void BM_LinearizeDiagonal(benchmark::State& state) {
  const auto n = state.range(0);
  const miep::AssignmentContext ctx(sample_matrix(n, 2), miep::AffineFamily::diagonal(n));
  miep::Rng rng(3);
  const miep::Vector x = miep::random_vector(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(miep::linearize(ctx, x));
}
BENCHMARK(BM_LinearizeDiagonal)->DenseRange(2, 8, 2);

void BM_PsiBar(benchmark::State& state) {
  const auto n = state.range(0);
  const miep::Matrix m = sample_matrix(n, 4);
  const miep::Matrix z = sample_matrix(n, 5);
  const miep::Matrix id = miep::Matrix::Identity(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(miep::psi_bar(m, id, z));
}
BENCHMARK(BM_PsiBar)->DenseRange(2, 6, 2);

void BM_CountDiagonal(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  miep::Rng rng(6);
  miep::Matrix m = miep::random_matrix(rng, n, n);
  m.diagonal().array() += 3.0;
  const miep::MonicPoly p(miep::random_vector(rng, n));
  for (auto _ : state) benchmark::DoNotOptimize(miep::count_solutions_diagonal(m, p));
}
BENCHMARK(BM_CountDiagonal)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
