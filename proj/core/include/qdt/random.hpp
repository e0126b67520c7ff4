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
/**
 * @file random.hpp
 * Seeded randomness. Every sampling routine takes an explicit Rng; trial
 * seeds are derived from a master seed so reports are bit-reproducible.
 */
#pragma once

#include <cstdint>
#include <random>

namespace qdt {

using Rng = std::mt19937_64;

/// Deterministically mixes (master, stream) into an independent seed
/// (splitmix64 finalizer).
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t master,
                                        std::uint64_t stream) noexcept;

[[nodiscard]] inline Rng make_rng(std::uint64_t master, std::uint64_t stream) {
    return Rng{derive_seed(master, stream)};
}

[[nodiscard]] double uniform_real(Rng &rng, double lo, double hi);

[[nodiscard]] double standard_normal(Rng &rng);

} // namespace qdt
