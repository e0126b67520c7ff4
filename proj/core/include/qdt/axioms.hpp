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
 * @file axioms.hpp
 * Residual checkers for the value-functional axioms and a seeded suite
 * runner that aggregates them.
 *
 * Every checker returns the absolute difference between the two sides of
 * the identity it tests, so a violation is reported with its magnitude.
 *
 *   pivotal            V((phi1 + phi2)/sqrt2; x1, x2) = (x1 + x2)/2
 *   displacement       V(psi; x + k) = V(psi; x) + k
 *   zero_sum           V(psi; -x) = -V(psi; x)
 *   sum_relation       V(psi; x2, x1) + V(psi; x1, x2) = x1 + x2
 *   hidden_assumption  V(equal; x2, x1) = V(equal; x1, x2)
 *   general_swap       V(psi; x2, x1) = V(psi; x1, x2) for any lambda1, lambda2
 */
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdt/games.hpp"
#include "qdt/random.hpp"

namespace qdt {

enum class Axiom {
    Pivotal,
    Displacement,
    ZeroSum,
    SumRelation,
    HiddenAssumption,
    GeneralSwap,
};

inline constexpr std::array<Axiom, 6> kAllAxioms{
    Axiom::Pivotal,     Axiom::Displacement,     Axiom::ZeroSum,
    Axiom::SumRelation, Axiom::HiddenAssumption, Axiom::GeneralSwap};

inline constexpr double kDefaultAxiomTolerance = 1e-9;
inline constexpr double kDefaultUtilityBound = 10.0;

[[nodiscard]] std::string_view axiom_id(Axiom axiom) noexcept;
/// Equation label carried in serialized reports (`paper_eq`).
[[nodiscard]] int axiom_equation(Axiom axiom) noexcept;
[[nodiscard]] std::optional<Axiom> parse_axiom(std::string_view id) noexcept;

struct AxiomResidual {
    Axiom axiom;
    double residual;
    QuantumGame game;
    std::map<std::string, double> parameters;
};

[[nodiscard]] AxiomResidual check_displacement(const ValueFunctional &value,
                                               const QuantumGame &game, double k);

[[nodiscard]] AxiomResidual check_zero_sum(const ValueFunctional &value,
                                           const QuantumGame &game);

/// Uses outcomes (i, j); all other amplitudes must be within the support
/// epsilon of zero, otherwise DomainError.
[[nodiscard]] AxiomResidual check_sum_relation(const ValueFunctional &value,
                                               const QuantumGame &game,
                                               std::size_t i = 0, std::size_t j = 1);

[[nodiscard]] AxiomResidual check_hidden_assumption(const ValueFunctional &value,
                                                    double x1, double x2,
                                                    const OrthonormalBasis &basis,
                                                    double relative_phase = 0.0);

/// Requires a two-outcome game (support within outcomes 0 and 1).
[[nodiscard]] AxiomResidual check_general_swap(const ValueFunctional &value,
                                               const QuantumGame &game);

[[nodiscard]] AxiomResidual check_pivotal(const ValueFunctional &value, double x1,
                                          double x2, const OrthonormalBasis &basis,
                                          double relative_phase = 0.0);

/// Outcome of replaying the derivation displacement(k = -x1-x2) + zero_sum
/// => sum_relation on random two-outcome games.
struct ImplicationReport {
    std::size_t trials = 0;
    /// Trials where both premises held within tolerance.
    std::size_t premises_held = 0;
    /// Trials where the premises held but the conclusion exceeded 3 * tol.
    std::size_t violations = 0;
    double max_conclusion_residual = 0.0;
    double tolerance = kDefaultAxiomTolerance;

    [[nodiscard]] bool vacuous() const noexcept { return premises_held == 0; }
    [[nodiscard]] bool holds() const noexcept { return violations == 0; }
};

[[nodiscard]] ImplicationReport
check_implication_displacement_zerosum_to_sum(const ValueFunctional &value,
                                              std::size_t trials, std::uint64_t seed,
                                              double tol = kDefaultAxiomTolerance,
                                              std::size_t dim = 2);

struct AxiomStats {
    Axiom axiom;
    std::size_t trials = 0;
    std::size_t passes = 0;
    double max_residual = 0.0;
    /// Probe that produced max_residual.
    std::optional<AxiomResidual> worst_case;

    [[nodiscard]] double pass_fraction() const noexcept {
        return trials == 0 ? 0.0
                           : static_cast<double>(passes) / static_cast<double>(trials);
    }
    [[nodiscard]] bool all_passed() const noexcept { return passes == trials; }

    /// Folds one residual in. Ties keep the earlier worst case.
    void record(AxiomResidual residual, double tol);
};

struct SuiteConfig {
    std::vector<std::size_t> dims{2};
    std::size_t trials = 1000;
    double tolerance = kDefaultAxiomTolerance;
    std::uint64_t seed = 0;
    /// Utilities and displacements are drawn uniformly from [-bound, bound].
    double utility_bound = kDefaultUtilityBound;
};

struct AxiomReport {
    std::string functional;
    SuiteConfig config;
    std::vector<AxiomStats> axioms;

    [[nodiscard]] const AxiomStats &stats(Axiom axiom) const;
};

/// Runs every checker `config.trials` times. Trial t draws its game from
/// derive_seed(config.seed, t) in dimension dims[t % dims.size()], so two
/// functionals run with the same config see identical probes.
[[nodiscard]] AxiomReport run_suite(const ValueFunctional &value,
                                    const SuiteConfig &config);

} // namespace qdt
