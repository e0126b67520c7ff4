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

#include "qdt/axioms.hpp"

static void BM_RunSuite(benchmark::State &state) {
    const auto value = qdt::ValueFunctional::born();
    qdt::SuiteConfig config;
    config.dims = {static_cast<std::size_t>(state.range(0))};
    config.trials = 100;
    config.seed = 7;
    for (auto _ : state) {
        auto report = qdt::run_suite(value, config);
        benchmark::DoNotOptimize(report);
    }
    state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_RunSuite)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
