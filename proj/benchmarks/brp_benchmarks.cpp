// Copyright 2026 The brp-toolkit Authors.
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

#include "brp/bench.hpp"
#include "brp/bounds.hpp"
#include "brp/mip/backend.hpp"
#include "brp/mip/builder.hpp"
#include "brp/mip/lp_format.hpp"
#include "brp/oracle.hpp"

namespace {

// Instances of shape h x w; state.range(0) = h, state.range(1) = w.
brp::Configuration instance(const benchmark::State& state, std::uint64_t seed) {
  return brp::generate_instance(seed, static_cast<int>(state.range(0)),
                                static_cast<int>(state.range(1)));
}

void BM_AllBounds(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const brp::Configuration c = instance(state, seed++ % 64);
    benchmark::DoNotOptimize(brp::all_bounds(c));
  }
}
BENCHMARK(BM_AllBounds)->Args({3, 3})->Args({4, 4})->Args({5, 6})->Args({6, 10});

void BM_Lb4Value(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const brp::Configuration c = instance(state, seed++ % 64);
    benchmark::DoNotOptimize(brp::lb4_value(c));
  }
}
BENCHMARK(BM_Lb4Value)->Args({4, 4})->Args({6, 10});

void BM_SolveExact(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const brp::Configuration c = instance(state, seed++ % 16);
    benchmark::DoNotOptimize(brp::solve_exact(c).optimum);
  }
}
BENCHMARK(BM_SolveExact)->Args({3, 3})->Args({3, 4})->Args({4, 4})->Unit(benchmark::kMillisecond);

void BM_BuildAndEmitM3(benchmark::State& state) {
  const brp::mip::PreparedInstance p = brp::mip::prepare_instance(instance(state, 7));
  const int L = brp::lb4_value(p.config);
  const int T = brp::solve_restricted(p.config).optimum;
  for (auto _ : state) {
    const brp::mip::Model m = brp::mip::build_brp_m3(p.config, p.config.max_height() + 2, L, T);
    benchmark::DoNotOptimize(brp::mip::emit_lp(m).size());
  }
}
BENCHMARK(BM_BuildAndEmitM3)->Args({3, 3})->Args({4, 4})->Unit(benchmark::kMillisecond);

void BM_InternalBackendM3R(benchmark::State& state) {
  brp::mip::InternalBackend backend;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const brp::mip::PreparedInstance p = brp::mip::prepare_instance(instance(state, seed++ % 16));
    const int L = brp::lb4_value(p.config);
    if (L == 0) continue;
    const brp::mip::Model m = brp::mip::build_brp_m3r(p.config, std::nullopt, L);
    benchmark::DoNotOptimize(backend.solve(m, nullptr, {}).objective);
  }
}
BENCHMARK(BM_InternalBackendM3R)->Args({3, 3})->Args({4, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
