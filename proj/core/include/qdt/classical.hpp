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
 * @file classical.hpp
 * Classical decision theory: expected utility, F-mean certainty
 * equivalents, and the two-outcome Insufficient-Reason solver.
 */
#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "qdt/transforms.hpp"

namespace qdt {

/// Probabilities on the simplex (within 1e-10) and one utility per event.
class ClassicalGame {
  public:
    ClassicalGame(std::vector<double> probabilities, std::vector<double> utilities);

    [[nodiscard]] std::size_t size() const noexcept { return probabilities_.size(); }
    [[nodiscard]] const std::vector<double> &probabilities() const noexcept {
        return probabilities_;
    }
    [[nodiscard]] const std::vector<double> &utilities() const noexcept {
        return utilities_;
    }

  private:
    std::vector<double> probabilities_;
    std::vector<double> utilities_;
};

[[nodiscard]] double expected_utility(const ClassicalGame &game);

/// F^{-1}(sum_j p_j F(x_j)); lies in [min x_j, max x_j].
[[nodiscard]] double certainty_equivalent(const ClassicalGame &game,
                                          const MonotoneTransform &transform);

struct UtilityPair {
    double x1;
    double x2;
};

struct InsufficientReasonSolution {
    double p1;
    double p2;
    /// Euclidean norm of the constraint residual at the solution.
    double residual;
};

/// Least-squares solution of
///   (p1 - p2)(F(x2) - F(x1)) = 0   for every probe pair,
///   p1 + p2 = 1.
/// Throws DegenerateInput when F(x1) = F(x2) for every pair (the system
/// is rank deficient and p1 - p2 is unconstrained).
[[nodiscard]] InsufficientReasonSolution
solve_insufficient_reason(const MonotoneTransform &transform,
                          std::span<const UtilityPair> probes);

/// Uniform 1/n assignment over n indistinguishable outcomes. This is the
/// n-outcome statement of the same principle, returned as-is rather than
/// derived.
[[nodiscard]] std::vector<double> insufficient_reason_uniform(std::size_t n);

/// | value - F^{-1}(p1 F(x1) + p2 F(x2)) |: how far a quantum value on a
/// two-outcome game is from the classical representation with (p1, p2).
[[nodiscard]] double consistency_bridge(double value, const MonotoneTransform &transform,
                                        std::pair<double, double> probabilities,
                                        UtilityPair utilities);

} // namespace qdt
