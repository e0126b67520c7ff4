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
#include "qdt/classical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "qdt/errors.hpp"

namespace qdt {

namespace {

constexpr double kSimplexTolerance = 1e-10;
constexpr double kSolverRankThreshold = 1e-12;

} // namespace

ClassicalGame::ClassicalGame(std::vector<double> probabilities,
                             std::vector<double> utilities)
    : probabilities_(std::move(probabilities)), utilities_(std::move(utilities)) {
    if (probabilities_.empty() || probabilities_.size() != utilities_.size()) {
        throw InvariantViolation(
            "ClassicalGame: probabilities and utilities must have equal, nonzero length");
    }
    double total = 0.0;
    for (double p : probabilities_) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw InvariantViolation("ClassicalGame: probabilities must lie in [0, 1]");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kSimplexTolerance) {
        throw InvariantViolation("ClassicalGame: probabilities must sum to 1 within 1e-10");
    }
}

double expected_utility(const ClassicalGame &game) {
    double value = 0.0;
    for (std::size_t j = 0; j < game.size(); ++j) {
        value += game.probabilities()[j] * game.utilities()[j];
    }
    return value;
}

double certainty_equivalent(const ClassicalGame &game, const MonotoneTransform &transform) {
    double mean = 0.0;
    for (std::size_t j = 0; j < game.size(); ++j) {
        mean += game.probabilities()[j] * transform.forward(game.utilities()[j]);
    }
    return transform.inverse(mean);
}

InsufficientReasonSolution solve_insufficient_reason(const MonotoneTransform &transform,
                                                     std::span<const UtilityPair> probes) {
    if (probes.empty()) {
        throw DegenerateInput("solve_insufficient_reason: no probe pairs supplied");
    }
    const auto rows = static_cast<Eigen::Index>(probes.size() + 1);
    Eigen::MatrixXd a(rows, 2);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(rows);
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const double gap = transform.forward(probes[i].x2) - transform.forward(probes[i].x1);
        const auto r = static_cast<Eigen::Index>(i);
        a(r, 0) = gap;
        a(r, 1) = -gap;
    }
    a(rows - 1, 0) = 1.0;
    a(rows - 1, 1) = 1.0;
    b(rows - 1) = 1.0;

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    qr.setThreshold(kSolverRankThreshold);
    if (qr.rank() < 2) {
        throw DegenerateInput(
            "solve_insufficient_reason: underdetermined, F(x1) = F(x2) for every probe pair");
    }
    const Eigen::Vector2d p = qr.solve(b);
    return {p(0), p(1), (a * p - b).norm()};
}

std::vector<double> insufficient_reason_uniform(std::size_t n) {
    if (n == 0) {
        throw DomainError("insufficient_reason_uniform: need at least one outcome");
    }
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

double consistency_bridge(double value, const MonotoneTransform &transform,
                          std::pair<double, double> probabilities, UtilityPair utilities) {
    const ClassicalGame game({probabilities.first, probabilities.second},
                             {utilities.x1, utilities.x2});
    return std::abs(value - certainty_equivalent(game, transform));
}

} // namespace qdt
