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
#include "qdt/games.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "qdt/errors.hpp"

namespace qdt {

QuantumGame::QuantumGame(OrthonormalBasis eigenbasis, std::vector<double> utilities,
                         CVector amplitudes)
    : eigenbasis_(std::move(eigenbasis)), utilities_(std::move(utilities)),
      amplitudes_(std::move(amplitudes)) {
    const std::size_t d = eigenbasis_.dim();
    if (utilities_.size() != d) {
        throw InvariantViolation("QuantumGame: utilities length must equal dim (" +
                                 std::to_string(utilities_.size()) + " vs " +
                                 std::to_string(d) + ")");
    }
    if (static_cast<std::size_t>(amplitudes_.size()) != d) {
        throw InvariantViolation("QuantumGame: amplitudes length must equal dim (" +
                                 std::to_string(amplitudes_.size()) + " vs " +
                                 std::to_string(d) + ")");
    }
    for (double x : utilities_) {
        if (!std::isfinite(x)) {
            throw InvariantViolation("QuantumGame: utilities must be finite");
        }
    }
    const double total = amplitudes_.squaredNorm();
    if (!(std::abs(total - 1.0) <= kGameNormTolerance)) {
        throw InvariantViolation(
            "QuantumGame: squared amplitudes must sum to 1 within 1e-10 (got " +
            std::to_string(total) + ")");
    }
}

StateVector QuantumGame::state() const {
    return StateVector::normalized(eigenbasis_.as_matrix() * amplitudes_);
}

HermitianOperator QuantumGame::utility_operator() const {
    const auto n = static_cast<Eigen::Index>(dim());
    CMatrix x = CMatrix::Zero(n, n);
    for (std::size_t j = 0; j < dim(); ++j) {
        x += utilities_[j] * projector(eigenbasis_[j]);
    }
    // Hermitize exactly; the sum of projectors is Hermitian up to rounding.
    CMatrix h = (x + x.adjoint()) * 0.5;
    return HermitianOperator(std::move(h));
}

QuantumGame QuantumGame::with_utilities(std::vector<double> utilities) const {
    return QuantumGame(eigenbasis_, std::move(utilities), amplitudes_);
}

QuantumGame make_game(const StateVector &state, std::span<const Eigenpair> pairs) {
    std::vector<StateVector> vectors;
    std::vector<double> utilities;
    vectors.reserve(pairs.size());
    utilities.reserve(pairs.size());
    for (const auto &p : pairs) {
        if (p.eigenvector.dim() != state.dim()) {
            throw DimensionMismatch("make_game: eigenvector dimension " +
                                    std::to_string(p.eigenvector.dim()) +
                                    " does not match state dimension " +
                                    std::to_string(state.dim()));
        }
        vectors.push_back(p.eigenvector);
        utilities.push_back(p.utility);
    }
    if (pairs.size() != state.dim()) {
        throw DimensionMismatch("make_game: need " + std::to_string(state.dim()) +
                                " eigenpairs, got " + std::to_string(pairs.size()));
    }
    OrthonormalBasis basis(std::move(vectors));
    CVector amplitudes(static_cast<Eigen::Index>(basis.dim()));
    for (std::size_t j = 0; j < basis.dim(); ++j) {
        amplitudes(static_cast<Eigen::Index>(j)) = inner_product(basis[j], state);
    }
    return QuantumGame(std::move(basis), std::move(utilities), std::move(amplitudes));
}

QuantumGame two_outcome_game(const OrthonormalBasis &basis, Complex lambda1,
                             Complex lambda2, double x1, double x2) {
    if (basis.dim() < 2) {
        throw DomainError("two_outcome_game: basis needs at least 2 vectors");
    }
    const auto n = static_cast<Eigen::Index>(basis.dim());
    CVector amplitudes = CVector::Zero(n);
    amplitudes(0) = lambda1;
    amplitudes(1) = lambda2;
    std::vector<double> utilities(basis.dim(), 0.0);
    utilities[0] = x1;
    utilities[1] = x2;
    return QuantumGame(basis, std::move(utilities), std::move(amplitudes));
}

QuantumGame equal_superposition_game(const OrthonormalBasis &basis, double x1,
                                     double x2, double relative_phase) {
    const double h = 1.0 / std::sqrt(2.0);
    return two_outcome_game(basis, h, std::polar(h, relative_phase), x1, x2);
}

QuantumGame displace(const QuantumGame &game, double k) {
    std::vector<double> x = game.utilities();
    for (double &v : x) {
        v += k;
    }
    return game.with_utilities(std::move(x));
}

QuantumGame negate(const QuantumGame &game) {
    std::vector<double> x = game.utilities();
    for (double &v : x) {
        v = -v;
    }
    return game.with_utilities(std::move(x));
}

QuantumGame swap_utilities(const QuantumGame &game, std::size_t i, std::size_t j) {
    if (i >= game.dim() || j >= game.dim()) {
        throw DomainError("swap_utilities: index out of range for dimension " +
                          std::to_string(game.dim()));
    }
    std::vector<double> x = game.utilities();
    std::swap(x[i], x[j]);
    return game.with_utilities(std::move(x));
}

QuantumGame permute(const QuantumGame &game, std::span<const std::size_t> perm) {
    const std::size_t d = game.dim();
    if (perm.size() != d) {
        throw DimensionMismatch("permute: permutation length must equal dim");
    }
    std::vector<bool> seen(d, false);
    std::vector<StateVector> vectors;
    std::vector<double> utilities;
    CVector amplitudes(static_cast<Eigen::Index>(d));
    for (std::size_t k = 0; k < d; ++k) {
        const std::size_t src = perm[k];
        if (src >= d || seen[src]) {
            throw DomainError("permute: not a permutation");
        }
        seen[src] = true;
        vectors.push_back(game.eigenbasis()[src]);
        utilities.push_back(game.utilities()[src]);
        amplitudes(static_cast<Eigen::Index>(k)) = game.amplitude(src);
    }
    return QuantumGame(OrthonormalBasis(std::move(vectors)), std::move(utilities),
                       std::move(amplitudes));
}

std::vector<std::size_t> support(const QuantumGame &game, double epsilon) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < game.dim(); ++j) {
        if (std::abs(game.amplitude(j)) > epsilon) {
            s.push_back(j);
        }
    }
    return s;
}

std::vector<double> born_probabilities(const QuantumGame &game) {
    std::vector<double> p(game.dim());
    for (std::size_t j = 0; j < game.dim(); ++j) {
        p[j] = std::norm(game.amplitude(j));
    }
    return p;
}

std::vector<double> uniform_support_probabilities(const QuantumGame &game,
                                                  double epsilon) {
    const auto s = support(game, epsilon);
    if (s.empty()) {
        throw DegenerateInput("uniform support: no amplitude exceeds epsilon");
    }
    std::vector<double> p(game.dim(), 0.0);
    for (std::size_t j : s) {
        p[j] = 1.0 / static_cast<double>(s.size());
    }
    return p;
}

double born_value(const QuantumGame &game) {
    double value = 0.0;
    for (std::size_t j = 0; j < game.dim(); ++j) {
        value += std::norm(game.amplitude(j)) * game.utilities()[j];
    }
    return value;
}

double uniform_support_value(const QuantumGame &game, double epsilon) {
    const auto s = support(game, epsilon);
    if (s.empty()) {
        throw DegenerateInput("uniform_support_value: empty support");
    }
    double total = 0.0;
    for (std::size_t j : s) {
        total += game.utilities()[j];
    }
    return total / static_cast<double>(s.size());
}

double deterministic_value(const QuantumGame &game, double epsilon) {
    for (std::size_t j = 0; j < game.dim(); ++j) {
        if (std::abs(game.amplitude(j)) > epsilon) {
            return game.utilities()[j];
        }
    }
    throw DegenerateInput("deterministic_value: empty support");
}

double fmean_value(const QuantumGame &game, std::span<const double> probabilities,
                   const MonotoneTransform &transform) {
    if (probabilities.size() != game.dim()) {
        throw DimensionMismatch("fmean_value: probability list length must equal dim");
    }
    double total = 0.0;
    for (double p : probabilities) {
        if (!(p >= 0.0)) {
            throw DomainError("fmean_value: probabilities must be nonnegative");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
        throw DomainError("fmean_value: probabilities must sum to 1 within 1e-10");
    }
    double mean = 0.0;
    for (std::size_t j = 0; j < game.dim(); ++j) {
        mean += probabilities[j] * transform.forward(game.utilities()[j]);
    }
    return transform.inverse(mean);
}

ValueFunctional::ValueFunctional(std::string name, Evaluator evaluate)
    : name_(std::move(name)), evaluate_(std::move(evaluate)) {}

ValueFunctional ValueFunctional::born() {
    return {"born", [](const QuantumGame &g) { return born_value(g); }};
}

ValueFunctional ValueFunctional::uniform_support(double epsilon) {
    return {"uniform",
            [epsilon](const QuantumGame &g) { return uniform_support_value(g, epsilon); }};
}

ValueFunctional ValueFunctional::deterministic(double epsilon) {
    return {"deterministic",
            [epsilon](const QuantumGame &g) { return deterministic_value(g, epsilon); }};
}

ValueFunctional ValueFunctional::fmean(MonotoneTransform transform, ProbabilityRule rule,
                                       std::string rule_name) {
    std::string name = "fmean[" + transform.name() + "," + rule_name + "]";
    return {std::move(name),
            [transform = std::move(transform), rule = std::move(rule)](const QuantumGame &g) {
                const auto p = rule(g);
                return fmean_value(g, p, transform);
            }};
}

} // namespace qdt
