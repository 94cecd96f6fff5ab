// Copyright 2026 The optpovm Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <benchmark/benchmark.h>

#include "optpovm/certifier.hpp"
#include "optpovm/phase_povm.hpp"
#include "optpovm/povm_su2.hpp"

namespace {

using namespace optpovm;

void BM_WignerD(benchmark::State& state) {
  const int two_j = static_cast<int>(state.range(0));
  double theta = 0.1;
  for (auto _ : state) {
    double acc = 0.0;
    for (int two_m = -two_j; two_m <= two_j; two_m += 2) acc += wigner_d(two_j, two_m, two_j, theta);
    benchmark::DoNotOptimize(acc);
    theta += 1e-9;
  }
}
BENCHMARK(BM_WignerD)->Arg(2)->Arg(10)->Arg(40);

void BM_BuildSu2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_povm_su2(n));
}
BENCHMARK(BM_BuildSu2)->Arg(1)->Arg(4)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_OptimizePhases(benchmark::State& state) {
  const auto kernel = f_u1_analytic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(optimize_phases(kernel));
}
BENCHMARK(BM_OptimizePhases)->Arg(2)->Arg(6)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_CertifySu2(benchmark::State& state) {
  const auto povm = build_povm_su2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify(povm));
}
BENCHMARK(BM_CertifySu2)->Arg(2)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_KernelQuadrature(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(f_su2_quadrature(n, n + 2));
}
BENCHMARK(BM_KernelQuadrature)->Arg(4)->Arg(10)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
