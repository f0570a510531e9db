// Copyright 2026 The cwsim Authors
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

// Serial reference kernel versus the OpenMP kernel on one measurement setting.

#include <benchmark/benchmark.h>

#include "cwsim/protocol.hpp"

namespace {

using namespace cwsim;

ExperimentConfig bench_config(std::int64_t n, Scheme scheme) {
    ExperimentConfig c;
    c.model = {MixtureVariant::Discrete, 0.6};
    c.noise = NoiseParams::with_defaults(1.0);
    c.n = static_cast<std::uint64_t>(n);
    c.scheme = scheme;
    return c;
}

void BM_run_setting_serial(benchmark::State &state) {
    const ExperimentConfig c = bench_config(state.range(0), static_cast<Scheme>(state.range(1)));
    const MeasurementSetting s{c.scheme, SingleQubitBasis::LR, SingleQubitBasis::LR};
    const RngStream stream(1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_setting_serial(c, s, stream));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_run_setting_omp(benchmark::State &state) {
    ExperimentConfig c = bench_config(state.range(0), static_cast<Scheme>(state.range(1)));
    c.threads = static_cast<int>(state.range(2));
    const MeasurementSetting s{c.scheme, SingleQubitBasis::LR, SingleQubitBasis::LR};
    const RngStream stream(1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_setting(c, s, stream));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

constexpr std::int64_t kLocal = static_cast<std::int64_t>(Scheme::Local);
constexpr std::int64_t kJoint = static_cast<std::int64_t>(Scheme::Joint);

}  // namespace

BENCHMARK(BM_run_setting_serial)
    ->ArgNames({"n", "scheme"})
    ->ArgsProduct({{1 << 16, 1 << 20}, {kLocal, kJoint}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK(BM_run_setting_omp)
    ->ArgNames({"n", "scheme", "threads"})
    ->ArgsProduct({{1 << 16, 1 << 20}, {kLocal, kJoint}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
