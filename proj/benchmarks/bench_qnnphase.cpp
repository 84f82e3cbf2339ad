// Copyright 2026 The qnnphase Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qnn/dynamics.hpp"
#include "qnn/learning.hpp"
#include "qnn/statesgen.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

const qnn::ControlWaveforms &default_waveforms() {
    static const qnn::ControlWaveforms w(qnn::kDefaultDt, qnn::kDefaultSteps,
                                         qnn::kDefaultInitialControls);
    return w;
}

void BM_Rk4Step(benchmark::State &state) {
    qnn::Amplitudes psi = qnn::QuantumState::basis(0).amplitudes();
    for (auto _ : state) {
        psi = qnn::rk4_step(psi, qnn::kDefaultInitialControls, qnn::kDefaultDt);
        benchmark::DoNotOptimize(psi);
    }
}
BENCHMARK(BM_Rk4Step);

void BM_PropagateFinal(benchmark::State &state) {
    const auto psi0 = qnn::QuantumState::basis(0).amplitudes();
    for (auto _ : state) {
        benchmark::DoNotOptimize(qnn::propagate_final(psi0, default_waveforms()));
    }
}
BENCHMARK(BM_PropagateFinal)->Unit(benchmark::kMicrosecond);

void BM_PropagateTrajectory(benchmark::State &state) {
    const auto psi0 = qnn::QuantumState::basis(0).amplitudes();
    for (auto _ : state) {
        benchmark::DoNotOptimize(qnn::propagate(psi0, default_waveforms()));
    }
}
BENCHMARK(BM_PropagateTrajectory)->Unit(benchmark::kMicrosecond);

void BM_PropagateExpm(benchmark::State &state) {
    const auto psi0 = qnn::QuantumState::basis(0).amplitudes();
    for (auto _ : state) {
        benchmark::DoNotOptimize(qnn::propagate_expm(psi0, default_waveforms()));
    }
}
BENCHMARK(BM_PropagateExpm)->Unit(benchmark::kMillisecond);

void BM_PropagateDensity(benchmark::State &state) {
    const auto rho0 = qnn::pure_density(qnn::QuantumState::basis(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qnn::propagate_density(rho0, default_waveforms()));
    }
}
BENCHMARK(BM_PropagateDensity)->Unit(benchmark::kMillisecond);

void BM_LossAndGradient(benchmark::State &state) {
    const auto pairs = qnn::build_training_set();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            qnn::loss_and_gradient(pairs.front(), default_waveforms()));
    }
}
BENCHMARK(BM_LossAndGradient)->Unit(benchmark::kMicrosecond);

void BM_FiniteDifference(benchmark::State &state) {
    const auto pairs = qnn::build_training_set();
    for (auto _ : state) {
        benchmark::DoNotOptimize(qnn::fd_gradient(
            pairs.front(), default_waveforms(), 1000, qnn::Control::zeta, 1e-6));
    }
}
BENCHMARK(BM_FiniteDifference)->Unit(benchmark::kMillisecond);

void BM_TrainingEpoch(benchmark::State &state) {
    const auto pairs = qnn::build_training_set();
    qnn::TrainConfig cfg;
    cfg.epochs = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qnn::train(pairs, cfg));
    }
}
BENCHMARK(BM_TrainingEpoch)->Unit(benchmark::kMillisecond);

void BM_EvaluateTestSet(benchmark::State &state) {
    const auto set = qnn::build_test_set(qnn::PhaseOffset::phi, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qnn::evaluate(set.pairs, default_waveforms()));
    }
}
BENCHMARK(BM_EvaluateTestSet)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
