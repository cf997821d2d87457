// Copyright 2026 The qdcsim Authors
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

#include <numbers>

#include "qdc/devices.hpp"

namespace {

using namespace qdc;

void BM_BuildGrid(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DeviceConfig config{n, 2, 1.0, 0.0, GridControl{1.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_grid_qdc(config));
    }
}
BENCHMARK(BM_BuildGrid)->Arg(25)->Arg(101);

void BM_Diagonalize(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto h = build_grid_qdc(DeviceConfig{n, 2, 1.0, 0.0, GridControl{1.0}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(diagonalize(h));
    }
}
BENCHMARK(BM_Diagonalize)->Arg(25)->Arg(101);

void BM_Evolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto h = build_grid_qdc(DeviceConfig{n, 2, 1.0, 0.0, GridControl{1.0}});
    const auto p = diagonalize(h);
    const auto psi0 = basis_state(h, Eigen::Index{0});
    double t = 0.0;
    for (auto _ : state) {
        t += 0.01;
        benchmark::DoNotOptimize(evolve(p, psi0, t));
    }
}
BENCHMARK(BM_Evolve)->Arg(25)->Arg(101);

void BM_TraceCoupler(benchmark::State& state) {
    const auto s = *find_scenario("coupler-drain");
    const auto h = build_model(s.config);
    const auto p = diagonalize(h);
    const auto psi0 = basis_state(h, s.input_label);
    for (auto _ : state) {
        benchmark::DoNotOptimize(trace(p, psi0, s.expected_time, 200));
    }
}
BENCHMARK(BM_TraceCoupler);

void BM_SwitchingSweep(benchmark::State& state) {
    std::vector<double> controls(11);
    for (int k = 0; k <= 10; ++k) {
        controls[k] = k / 10.0;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(switching_sweep(SweepFamily::grid, 5, controls));
    }
}
BENCHMARK(BM_SwitchingSweep);

void BM_FullVerifyScenarios(benchmark::State& state) {
    for (auto _ : state) {
        for (const auto& s : scenario_catalog()) {
            benchmark::DoNotOptimize(run_scenario(s));
        }
    }
}
BENCHMARK(BM_FullVerifyScenarios);

}  // namespace

BENCHMARK_MAIN();
