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
#include "qdt/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qdt/errors.hpp"

namespace qdt {

namespace {

double evaluate(const ValueFunctional &value, const QuantumGame &game, Axiom axiom) {
    try {
        return value(game);
    } catch (const std::exception &e) {
        throw EvaluationError("functional '" + value.name() + "' failed during " +
                              std::string(axiom_id(axiom)) + " check: " + e.what());
    }
}

void require_pair_support(const QuantumGame &game, std::size_t i, std::size_t j,
                          std::string_view what) {
    if (game.dim() < 2 || i >= game.dim() || j >= game.dim() || i == j) {
        throw DomainError(std::string(what) + ": needs two distinct valid outcome indices");
    }
    for (std::size_t k = 0; k < game.dim(); ++k) {
        if (k != i && k != j && std::abs(game.amplitude(k)) > kSupportEpsilon) {
            throw DomainError(std::string(what) + ": outcome " + std::to_string(k) +
                              " outside the designated pair has nonzero amplitude");
        }
    }
}

// Haar-random amplitudes on a two-dimensional subspace.
std::pair<Complex, Complex> two_outcome_amplitudes(Rng &rng) {
    const StateVector s = random_state(2, rng);
    return {s[0], s[1]};
}

} // namespace

std::string_view axiom_id(Axiom axiom) noexcept {
    switch (axiom) {
    case Axiom::Pivotal:
        return "pivotal";
    case Axiom::Displacement:
        return "displacement";
    case Axiom::ZeroSum:
        return "zero_sum";
    case Axiom::SumRelation:
        return "sum_relation";
    case Axiom::HiddenAssumption:
        return "hidden_assumption";
    case Axiom::GeneralSwap:
        return "general_swap";
    }
    return "unknown";
}

int axiom_equation(Axiom axiom) noexcept {
    switch (axiom) {
    case Axiom::Pivotal:
        return 5;
    case Axiom::Displacement:
        return 6;
    case Axiom::ZeroSum:
        return 7;
    case Axiom::SumRelation:
        return 10;
    case Axiom::HiddenAssumption:
        return 11;
    case Axiom::GeneralSwap:
        return 12;
    }
    return 0;
}

std::optional<Axiom> parse_axiom(std::string_view id) noexcept {
    for (Axiom a : kAllAxioms) {
        if (axiom_id(a) == id) {
            return a;
        }
    }
    return std::nullopt;
}

AxiomResidual check_displacement(const ValueFunctional &value, const QuantumGame &game,
                                 double k) {
    const double shifted = evaluate(value, displace(game, k), Axiom::Displacement);
    const double base = evaluate(value, game, Axiom::Displacement);
    return {Axiom::Displacement, std::abs(shifted - k - base), game, {{"k", k}}};
}

AxiomResidual check_zero_sum(const ValueFunctional &value, const QuantumGame &game) {
    const double negated = evaluate(value, negate(game), Axiom::ZeroSum);
    const double base = evaluate(value, game, Axiom::ZeroSum);
    return {Axiom::ZeroSum, std::abs(negated + base), game, {}};
}

AxiomResidual check_sum_relation(const ValueFunctional &value, const QuantumGame &game,
                                 std::size_t i, std::size_t j) {
    require_pair_support(game, i, j, "check_sum_relation");
    const double x1 = game.utilities()[i];
    const double x2 = game.utilities()[j];
    const double swapped = evaluate(value, swap_utilities(game, i, j), Axiom::SumRelation);
    const double base = evaluate(value, game, Axiom::SumRelation);
    return {Axiom::SumRelation,
            std::abs(swapped + base - (x1 + x2)),
            game,
            {{"x1", x1}, {"x2", x2}}};
}

AxiomResidual check_hidden_assumption(const ValueFunctional &value, double x1, double x2,
                                      const OrthonormalBasis &basis,
                                      double relative_phase) {
    const QuantumGame game = equal_superposition_game(basis, x1, x2, relative_phase);
    const double swapped =
        evaluate(value, swap_utilities(game, 0, 1), Axiom::HiddenAssumption);
    const double base = evaluate(value, game, Axiom::HiddenAssumption);
    return {Axiom::HiddenAssumption,
            std::abs(swapped - base),
            game,
            {{"x1", x1}, {"x2", x2}, {"phase", relative_phase}}};
}

AxiomResidual check_general_swap(const ValueFunctional &value, const QuantumGame &game) {
    require_pair_support(game, 0, 1, "check_general_swap");
    const double swapped = evaluate(value, swap_utilities(game, 0, 1), Axiom::GeneralSwap);
    const double base = evaluate(value, game, Axiom::GeneralSwap);
    return {Axiom::GeneralSwap,
            std::abs(swapped - base),
            game,
            {{"x1", game.utilities()[0]}, {"x2", game.utilities()[1]}}};
}

AxiomResidual check_pivotal(const ValueFunctional &value, double x1, double x2,
                            const OrthonormalBasis &basis, double relative_phase) {
    const QuantumGame game = equal_superposition_game(basis, x1, x2, relative_phase);
    const double v = evaluate(value, game, Axiom::Pivotal);
    return {Axiom::Pivotal,
            std::abs(v - 0.5 * (x1 + x2)),
            game,
            {{"x1", x1}, {"x2", x2}, {"phase", relative_phase}}};
}

ImplicationReport check_implication_displacement_zerosum_to_sum(const ValueFunctional &value,
                                                                std::size_t trials,
                                                                std::uint64_t seed,
                                                                double tol,
                                                                std::size_t dim) {
    ImplicationReport report;
    report.trials = trials;
    report.tolerance = tol;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = make_rng(seed, t);
        const OrthonormalBasis basis = random_basis(dim, rng);
        const auto [l1, l2] = two_outcome_amplitudes(rng);
        const double x1 = uniform_real(rng, -kDefaultUtilityBound, kDefaultUtilityBound);
        const double x2 = uniform_real(rng, -kDefaultUtilityBound, kDefaultUtilityBound);
        const QuantumGame game = two_outcome_game(basis, l1, l2, x1, x2);

        // V(psi; x1, x2) - x1 - x2 = V(psi; -x2, -x1), then the zero-sum
        // property applied to the game with utilities (x2, x1).
        const auto displacement = check_displacement(value, game, -x1 - x2);
        const auto zero_sum = check_zero_sum(value, swap_utilities(game, 0, 1));
        if (displacement.residual > tol || zero_sum.residual > tol) {
            continue;
        }
        ++report.premises_held;
        const auto conclusion = check_sum_relation(value, game);
        report.max_conclusion_residual =
            std::max(report.max_conclusion_residual, conclusion.residual);
        if (conclusion.residual > 3.0 * tol) {
            ++report.violations;
        }
    }
    return report;
}

void AxiomStats::record(AxiomResidual residual, double tol) {
    ++trials;
    if (residual.residual <= tol) {
        ++passes;
    }
    if (!worst_case || residual.residual > max_residual) {
        max_residual = residual.residual;
        worst_case = std::move(residual);
    }
}

const AxiomStats &AxiomReport::stats(Axiom axiom) const {
    for (const auto &s : axioms) {
        if (s.axiom == axiom) {
            return s;
        }
    }
    throw DomainError("AxiomReport: no statistics for " + std::string(axiom_id(axiom)));
}

AxiomReport run_suite(const ValueFunctional &value, const SuiteConfig &config) {
    if (config.trials == 0) {
        throw DomainError("run_suite: trials must be at least 1");
    }
    if (config.dims.empty()) {
        throw DomainError("run_suite: at least one dimension is required");
    }
    for (std::size_t d : config.dims) {
        if (d < 2) {
            throw DomainError("run_suite: dimensions must be at least 2");
        }
    }
    AxiomReport report{value.name(), config, {}};
    for (Axiom a : kAllAxioms) {
        report.axioms.push_back(AxiomStats{a, 0, 0, 0.0, std::nullopt});
    }
    auto slot = [&report](Axiom a) -> AxiomStats & {
        return report.axioms[static_cast<std::size_t>(a)];
    };

    const double bound = config.utility_bound;
    const double tol = config.tolerance;
    for (std::size_t t = 0; t < config.trials; ++t) {
        Rng rng = make_rng(config.seed, t);
        const std::size_t d = config.dims[t % config.dims.size()];
        const OrthonormalBasis basis = random_basis(d, rng);

        // Full-support game for the displacement and zero-sum properties.
        const StateVector psi = random_state(d, rng);
        std::vector<double> utilities(d);
        for (double &x : utilities) {
            x = uniform_real(rng, -bound, bound);
        }
        CVector amplitudes(static_cast<Eigen::Index>(d));
        for (std::size_t j = 0; j < d; ++j) {
            amplitudes(static_cast<Eigen::Index>(j)) = inner_product(basis[j], psi);
        }
        const QuantumGame full(basis, std::move(utilities), std::move(amplitudes));
        const double k = uniform_real(rng, -bound, bound);

        // Two designated outcomes, the rest with zero amplitude.
        const auto [l1, l2] = two_outcome_amplitudes(rng);
        const double x1 = uniform_real(rng, -bound, bound);
        const double x2 = uniform_real(rng, -bound, bound);
        const QuantumGame pair = two_outcome_game(basis, l1, l2, x1, x2);
        const double phase = uniform_real(rng, 0.0, 2.0 * std::numbers::pi);

        slot(Axiom::Pivotal).record(check_pivotal(value, x1, x2, basis, phase), tol);
        slot(Axiom::Displacement).record(check_displacement(value, full, k), tol);
        slot(Axiom::ZeroSum).record(check_zero_sum(value, full), tol);
        slot(Axiom::SumRelation).record(check_sum_relation(value, pair), tol);
        slot(Axiom::HiddenAssumption)
            .record(check_hidden_assumption(value, x1, x2, basis, phase), tol);
        slot(Axiom::GeneralSwap).record(check_general_swap(value, pair), tol);
    }
    return report;
}

} // namespace qdt
