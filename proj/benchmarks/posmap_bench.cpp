// Copyright 2026 The posmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "posmap/maps.hpp"
#include "posmap/measures.hpp"
#include "posmap/random.hpp"

namespace {

using namespace posmap;

void BM_HermitianEig(benchmark::State& state) {
  Rng rng(1);
  const auto h = random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h));
}
BENCHMARK(BM_HermitianEig)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_PartialTranspose(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const auto m = random_hermitian(d * d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(partial_transpose(m, {d, d}, Leg::second));
}
BENCHMARK(BM_PartialTranspose)->Arg(2)->Arg(4)->Arg(8);

void BM_EofUpperTwoQubits(benchmark::State& state) {
  const auto rho = random_density({2, 2}, 3, 3);
  SearchOptions o;
  o.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eof_upper(rho, o).value);
}
BENCHMARK(BM_EofUpperTwoQubits)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_DykstraChoiMap(benchmark::State& state) {
  const auto choi = choi_map();
  DecompositionOptions o;
  o.max_iter = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_decomposable(choi, o).residual);
}
BENCHMARK(BM_DykstraChoiMap)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_BlockPositivityChoiMap(benchmark::State& state) {
  const auto choi = choi_map();
  for (auto _ : state) benchmark::DoNotOptimize(is_block_positive(choi).minimum);
}
BENCHMARK(BM_BlockPositivityChoiMap)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
