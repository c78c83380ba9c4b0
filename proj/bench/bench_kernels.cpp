// Copyright 2026 The ottt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against the OpenMP ones.
//   ./bench_kernels --benchmark_filter=gemm

#include <benchmark/benchmark.h>
#include <omp.h>

#include <vector>

#include "ottt/kernels.hpp"
#include "ottt/rng.hpp"

namespace k = ottt::kernels;

namespace {

std::vector<float> Random(std::size_t n, std::uint64_t seed) {
  ottt::Rng rng(seed);
  std::vector<float> v(n);
  for (auto& x : v) x = static_cast<float>(rng.Uniform() - 0.5);
  return v;
}

// Batch 128 through a 784 -> 400 layer, the Fashion-MNIST hidden layer.
template <bool kParallel>
void BM_GemmNT(benchmark::State& state) {
  const std::size_t m = 128, n = static_cast<std::size_t>(state.range(0)), kk = 784;
  const auto a = Random(m * kk, 1), b = Random(n * kk, 2);
  std::vector<float> c(m * n);
  for (auto _ : state) {
    if constexpr (kParallel)
      k::parallel::gemm_nt<float>(m, n, kk, a, b, c, false);
    else
      k::serial::gemm_nt<float>(m, n, kk, a, b, c, false);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m * n * kk));
  state.counters["threads"] = kParallel ? omp_get_max_threads() : 1;
}
BENCHMARK(BM_GemmNT<false>)->Name("gemm_nt/serial")->Arg(400)->Arg(1024);
BENCHMARK(BM_GemmNT<true>)->Name("gemm_nt/parallel")->Arg(400)->Arg(1024);

// Weight gradient shape: [400 x 784] += g_u^T [128 x 400] * trace [128 x 784].
template <bool kParallel>
void BM_GemmTN(benchmark::State& state) {
  const std::size_t m = 400, n = 784, kk = 128;
  const auto a = Random(kk * m, 3), b = Random(kk * n, 4);
  std::vector<float> c(m * n);
  for (auto _ : state) {
    if constexpr (kParallel)
      k::parallel::gemm_tn<float>(m, n, kk, a, b, c, true);
    else
      k::serial::gemm_tn<float>(m, n, kk, a, b, c, true);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m * n * kk));
}
BENCHMARK(BM_GemmTN<false>)->Name("gemm_tn/serial");
BENCHMARK(BM_GemmTN<true>)->Name("gemm_tn/parallel");

// One 3x3 same-padded conv over a CIFAR-sized sample.
template <bool kParallel>
void BM_Conv2d(benchmark::State& state) {
  k::ConvGeometry g;
  g.channels = static_cast<std::size_t>(state.range(0));
  g.height = g.width = 32;
  g.kernel_h = g.kernel_w = 3;
  g.pad = 1;
  const std::size_t out_ch = 2 * g.channels;
  const auto in = Random(g.channels * 32 * 32, 5), w = Random(out_ch * g.patch(), 6);
  std::vector<float> out(out_ch * g.out_h() * g.out_w());
  for (auto _ : state) {
    if constexpr (kParallel)
      k::parallel::conv2d<float>(g, out_ch, in, w, out);
    else
      k::serial::conv2d<float>(g, out_ch, in, w, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(out.size() * g.patch()));
}
BENCHMARK(BM_Conv2d<false>)->Name("conv2d/serial")->Arg(3)->Arg(16);
BENCHMARK(BM_Conv2d<true>)->Name("conv2d/parallel")->Arg(3)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
