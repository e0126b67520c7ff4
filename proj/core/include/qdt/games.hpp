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
 * @file games.hpp
 * Quantum games and the value functionals evaluated on them.
 *
 * A game is stored in the eigenbasis of its utility operator: outcome j has
 * eigenvector phi_j, utility x_j and amplitude lambda_j = <phi_j|psi>. The
 * transformations below (displace, negate, swap) change only the utilities,
 * so the state is the same vector on both sides of every axiom check.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qdt/hilbert.hpp"
#include "qdt/transforms.hpp"

namespace qdt {

/// An amplitude counts as nonzero when its modulus exceeds this.
inline constexpr double kSupportEpsilon = 1e-9;
inline constexpr double kGameNormTolerance = 1e-10;
inline constexpr double kProbabilityTolerance = 1e-10;

class QuantumGame {
  public:
    /// Validates lengths and sum_j |lambda_j|^2 = 1 within 1e-10.
    QuantumGame(OrthonormalBasis eigenbasis, std::vector<double> utilities,
                CVector amplitudes);

    [[nodiscard]] std::size_t dim() const noexcept { return utilities_.size(); }
    [[nodiscard]] const OrthonormalBasis &eigenbasis() const noexcept {
        return eigenbasis_;
    }
    [[nodiscard]] const std::vector<double> &utilities() const noexcept {
        return utilities_;
    }
    [[nodiscard]] const CVector &amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] Complex amplitude(std::size_t j) const {
        return amplitudes_(static_cast<Eigen::Index>(j));
    }

    /// sum_j lambda_j |phi_j>
    [[nodiscard]] StateVector state() const;
    /// sum_j x_j |phi_j><phi_j|
    [[nodiscard]] HermitianOperator utility_operator() const;

    [[nodiscard]] QuantumGame with_utilities(std::vector<double> utilities) const;

  private:
    OrthonormalBasis eigenbasis_;
    std::vector<double> utilities_;
    CVector amplitudes_;
};

struct Eigenpair {
    double utility;
    StateVector eigenvector;
};

/// Computes lambda_j = <phi_j|state>. Throws InvariantViolation for
/// non-orthonormal eigenvectors and DimensionMismatch for size errors.
[[nodiscard]] QuantumGame make_game(const StateVector &state,
                                    std::span<const Eigenpair> pairs);

/// Two-outcome game on the first two members of `basis`: amplitudes
/// (lambda1, lambda2), remaining amplitudes zero and remaining utilities 0.
[[nodiscard]] QuantumGame two_outcome_game(const OrthonormalBasis &basis,
                                           Complex lambda1, Complex lambda2,
                                           double x1, double x2);

/// (phi_1 + e^{i phase} phi_2)/sqrt(2) with utilities (x1, x2).
[[nodiscard]] QuantumGame equal_superposition_game(const OrthonormalBasis &basis,
                                                   double x1, double x2,
                                                   double relative_phase = 0.0);

[[nodiscard]] QuantumGame displace(const QuantumGame &game, double k);
[[nodiscard]] QuantumGame negate(const QuantumGame &game);
/// Throws DomainError for an index out of range.
[[nodiscard]] QuantumGame swap_utilities(const QuantumGame &game, std::size_t i,
                                         std::size_t j);
/// Applies `perm` simultaneously to amplitudes, utilities and eigenbasis:
/// output outcome k is input outcome perm[k].
[[nodiscard]] QuantumGame permute(const QuantumGame &game,
                                  std::span<const std::size_t> perm);

/// Outcome indices with |lambda_j| > epsilon, ascending.
[[nodiscard]] std::vector<std::size_t> support(const QuantumGame &game,
                                               double epsilon = kSupportEpsilon);

[[nodiscard]] std::vector<double> born_probabilities(const QuantumGame &game);
/// 1/|S| on the support S, 0 elsewhere.
[[nodiscard]] std::vector<double>
uniform_support_probabilities(const QuantumGame &game,
                              double epsilon = kSupportEpsilon);

/// sum_j |lambda_j|^2 x_j
[[nodiscard]] double born_value(const QuantumGame &game);

/// Arithmetic mean of x_j over the support. DegenerateInput if empty.
[[nodiscard]] double uniform_support_value(const QuantumGame &game,
                                           double epsilon = kSupportEpsilon);

/// Utility of the lowest-index outcome in the support: "outcome 1 always
/// occurs", falling back to the next supported outcome when lambda_1 = 0.
[[nodiscard]] double deterministic_value(const QuantumGame &game,
                                         double epsilon = kSupportEpsilon);

/// F^{-1}(sum_j p_j F(x_j)).
[[nodiscard]] double fmean_value(const QuantumGame &game,
                                 std::span<const double> probabilities,
                                 const MonotoneTransform &transform);

using ProbabilityRule = std::function<std::vector<double>(const QuantumGame &)>;

/// Named, immutable map from games to real values.
class ValueFunctional {
  public:
    using Evaluator = std::function<double(const QuantumGame &)>;

    ValueFunctional(std::string name, Evaluator evaluate);

    [[nodiscard]] const std::string &name() const noexcept { return name_; }
    [[nodiscard]] double operator()(const QuantumGame &game) const {
        return evaluate_(game);
    }

    [[nodiscard]] static ValueFunctional born();
    [[nodiscard]] static ValueFunctional uniform_support(double epsilon = kSupportEpsilon);
    [[nodiscard]] static ValueFunctional deterministic(double epsilon = kSupportEpsilon);
    [[nodiscard]] static ValueFunctional fmean(MonotoneTransform transform,
                                               ProbabilityRule rule,
                                               std::string rule_name);

  private:
    std::string name_;
    Evaluator evaluate_;
};

} // namespace qdt
