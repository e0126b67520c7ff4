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

#include "qdt/hilbert.hpp"

static void BM_RandomBasis(benchmark::State &state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    qdt::Rng rng = qdt::make_rng(1, 0);
    for (auto _ : state) {
        auto basis = qdt::random_basis(dim, rng);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(BM_RandomBasis)->DenseRange(2, 8, 2);

static void BM_HermitianEigendecomposition(benchmark::State &state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    qdt::Rng rng = qdt::make_rng(2, 0);
    const auto op = qdt::random_hermitian(dim, rng);
    for (auto _ : state) {
        auto eig = qdt::hermitian_eigendecomposition(op);
        benchmark::DoNotOptimize(eig);
    }
}
BENCHMARK(BM_HermitianEigendecomposition)->DenseRange(2, 8, 2);
