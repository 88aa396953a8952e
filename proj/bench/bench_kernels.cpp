#include <benchmark/benchmark.h>

#include "snnlab/conv.hpp"
#include "snnlab/data.hpp"
#include "snnlab/matrix.hpp"

using namespace snnlab;

namespace {

// Binary spike matrix with roughly `rate` ones, as the simulator produces.
Matrix spikes(std::size_t rows, std::size_t cols, double rate) {
  Matrix m = synthetic_gaussian(rows, cols, 1);
  for (double& v : m.values()) v = v > 0.0 ? (v < rate * 2.5 ? 1.0 : 0.0) : 0.0;
  return m;
}

template <Matrix (*Fn)(const Matrix&, const Matrix&)>
void BM_matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = spikes(128, n, 0.2);
  const Matrix b = synthetic_gaussian(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(a, b));
  state.SetItemsProcessed(state.iterations() * 128 * static_cast<std::int64_t>(n * n));
}

template <Matrix (*Fn)(const Matrix&, const Matrix&)>
void BM_matmul_at_b(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = spikes(128, n, 0.2);
  const Matrix g = synthetic_gaussian(128, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(a, g));
}

template <Matrix (*Fn)(const Matrix&, const Matrix&)>
void BM_matmul_a_bt(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix g = synthetic_gaussian(128, n, 3);
  const Matrix w = synthetic_gaussian(n, n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(g, w));
}

template <Matrix (*Fn)(const Matrix&, const Matrix&, const ConvGeometry&)>
void BM_conv(benchmark::State& state) {
  const ConvGeometry g{16, 16, 3, 1, 28, 28};
  const Matrix x = spikes(16, g.in_features(), 0.2);
  const Matrix k = synthetic_gaussian(g.out_channels, g.patch_size(), 5);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(x, k, g));
}

}  // namespace

BENCHMARK(BM_matmul<matmul>)->Name("matmul/openmp")->Arg(300)->Arg(1000);
BENCHMARK(BM_matmul<reference::matmul>)->Name("matmul/reference")->Arg(300)->Arg(1000);
BENCHMARK(BM_matmul_at_b<matmul_at_b>)->Name("matmul_at_b/openmp")->Arg(300)->Arg(1000);
BENCHMARK(BM_matmul_at_b<reference::matmul_at_b>)->Name("matmul_at_b/reference")->Arg(300)->Arg(1000);
BENCHMARK(BM_matmul_a_bt<matmul_a_bt>)->Name("matmul_a_bt/openmp")->Arg(300)->Arg(1000);
BENCHMARK(BM_matmul_a_bt<reference::matmul_a_bt>)->Name("matmul_a_bt/reference")->Arg(300)->Arg(1000);
BENCHMARK(BM_conv<conv2d_forward>)->Name("conv2d/im2col");
BENCHMARK(BM_conv<reference::conv2d_forward>)->Name("conv2d/reference");

BENCHMARK_MAIN();
