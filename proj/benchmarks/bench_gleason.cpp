// Copyright 2026 The qdt Authors

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

#include "qdt/gleason.hpp"

// Full tomography round trip with the default 10 * d^2 probes.
static void BM_FitDensityOperator(benchmark::State &state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    qdt::Rng rng = qdt::make_rng(3, 0);
    const auto f = qdt::born_frame_function(qdt::random_density_operator(dim, rng));
    const qdt::FitOptions options{10 * dim * dim, false, 4};
    for (auto _ : state) {
        auto fit = qdt::fit_density_operator(f, options, rng);
        benchmark::DoNotOptimize(fit);
    }
}
BENCHMARK(BM_FitDensityOperator)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

static void BM_DetectContextuality(benchmark::State &state) {
    const auto chi = qdt::StateVector::normalized(qdt::CVector::Ones(3));
    const auto a = qdt::assignment_from_frame_function(
        qdt::born_frame_function(qdt::DensityOperator::pure(chi)));
    const auto trials = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto r = qdt::detect_contextuality(a, trials, 1);
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DetectContextuality)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
