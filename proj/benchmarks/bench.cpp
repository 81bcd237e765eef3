// Copyright 2026 The wigzero Authors
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

#include <benchmark/benchmark.h>

#include "wigzero/certificates.hpp"
#include "wigzero/laguerre.hpp"
#include "wigzero/nodal.hpp"
#include "wigzero/wigner.hpp"

using namespace wigzero;

static void BM_WignerEvalPoint(benchmark::State& st) {
    const auto s = HermiteState::hermite(static_cast<unsigned>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(wigner::wigner_eval(s, {0.7, -0.3}).value);
}
BENCHMARK(BM_WignerEvalPoint)->Arg(1)->Arg(8)->Arg(32);

static void BM_WignerGrid(benchmark::State& st) {
    const auto s = HermiteState::hermite(4);
    const wigner::GridSpec g{static_cast<unsigned>(st.range(0)), 4.0, {}};
    for (auto _ : st) benchmark::DoNotOptimize(wigner::grid_sweep(s, g));
}
BENCHMARK(BM_WignerGrid)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_LaguerreZeros(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(laguerre::laguerre_zeros(static_cast<unsigned>(st.range(0)), 2));
}
BENCHMARK(BM_LaguerreZeros)->Arg(10)->Arg(50)->Unit(benchmark::kMicrosecond);

static void BM_CircleResiduals(benchmark::State& st) {
    const Coeffs c{0.0, 1.0 / std::sqrt(3.0), 0.0, std::sqrt(2.0 / 3.0)};
    for (auto _ : st) benchmark::DoNotOptimize(nodal::circle_residuals(c, 3.0));
}
BENCHMARK(BM_CircleResiduals);

static void BM_VerifyA2(benchmark::State& st) {
    const long n = st.range(0);
    for (auto _ : st) benchmark::DoNotOptimize(certificates::verify_A2(n, n));
}
BENCHMARK(BM_VerifyA2)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
