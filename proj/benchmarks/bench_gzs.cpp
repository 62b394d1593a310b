#include "gzs/diagrams.hpp"
#include "gzs/oracle.hpp"
#include "gzs/schubert.hpp"

#include <benchmark/benchmark.h>

namespace {

gzs::AmbientWeight doubling(int n) {
  std::vector<gzs::Integer> e;
  for (int k = 0; k < n; ++k) e.emplace_back((gzs::Integer(1) << k) - 1);
  return gzs::AmbientWeight(e);
}

void BM_Verify(benchmark::State& state) {
  const auto lambda = doubling(static_cast<int>(state.range(0)));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(gzs::verify(lambda, threads));
}
BENCHMARK(BM_Verify)->Args({3, 1})->Args({4, 1})->Args({4, 0})->Args({5, 0})->Unit(benchmark::kMillisecond);

void BM_ChevalleyFaces(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto lambda = doubling(n);
  const gzs::SimpleVertex v(gzs::Permutation::longest(n));
  const gzs::BorelChoice b{gzs::Permutation::identity(n)};
  for (auto _ : state) benchmark::DoNotOptimize(gzs::chevalley_faces(v, b, lambda));
}
BENCHMARK(BM_ChevalleyFaces)->DenseRange(3, 6);

void BM_CloseFace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto d = gzs::diagram_of_sigma(gzs::Permutation::longest(n));
  for (auto _ : state) benchmark::DoNotOptimize(gzs::close_face(d));
}
BENCHMARK(BM_CloseFace)->DenseRange(3, 8);

void BM_BruteFaces(benchmark::State& state) {
  const gzs::GZShape shape(doubling(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(gzs::brute_faces(shape));
}
BENCHMARK(BM_BruteFaces)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
