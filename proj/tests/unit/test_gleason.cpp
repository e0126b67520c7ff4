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
#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "qdt/errors.hpp"
#include "qdt/gleason.hpp"
#include "support/oracles.hpp"

using namespace qdt;

namespace {

const double kH = 1.0 / std::sqrt(2.0);

StateVector vec(std::initializer_list<Complex> xs) {
    CVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (auto x : xs) {
        v(i++) = x;
    }
    return StateVector::normalized(v);
}

OrthonormalBasis dft_basis(std::size_t d) {
    std::vector<StateVector> vs;
    for (std::size_t k = 0; k < d; ++k) {
        CVector v(static_cast<Eigen::Index>(d));
        for (std::size_t j = 0; j < d; ++j) {
            v(static_cast<Eigen::Index>(j)) =
                std::polar(1.0 / std::sqrt(double(d)), 2.0 * std::numbers::pi * double(j * k) / double(d));
        }
        vs.emplace_back(v);
    }
    return OrthonormalBasis(std::move(vs));
}

StateVector fixture_chi() { return vec({1.0, 1.0, 0.0}); }

} // namespace

TEST(BornFrameFunction, Examples) {
    const auto f = born_frame_function(DensityOperator::pure(vec({1.0, 0.0})));
    EXPECT_NEAR(f(vec({1.0, 0.0})), 1.0, 1e-15);
    EXPECT_NEAR(f(vec({1.0, 1.0})), 0.5, 1e-15);
    const auto mixed = born_frame_function(DensityOperator::maximally_mixed(3));
    Rng rng = make_rng(1, 0);
    for (int t = 0; t < 20; ++t) {
        EXPECT_NEAR(mixed(random_state(3, rng)), 1.0 / 3.0, 1e-14);
    }
    EXPECT_THROW((void)f(vec({1.0, 0.0, 0.0})), DimensionMismatch);
}

TEST(BasisNormalization, BornFrameFunctionsSumToOne) {
    for (std::size_t d = 2; d <= 6; ++d) {
        Rng rng = make_rng(2, d);
        const auto rho = random_density_operator(d, rng);
        const auto f = born_frame_function(rho);
        for (int t = 0; t < 50; ++t) {
            EXPECT_LE(check_basis_normalization(f, random_basis(d, rng)), 1e-12);
        }
    }
}

TEST(BasisNormalization, DetectsNonFrameFunction) {
    const FrameFunction quartic(3, [](const StateVector &psi) {
        const double p = std::norm(psi[0]);
        return p * p;
    });
    EXPECT_NEAR(check_basis_normalization(quartic, dft_basis(3)), 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(check_basis_normalization(quartic, OrthonormalBasis::computational(3)), 0.0, 1e-15);
}

TEST(DensityOperator, ValidationRejectsBadMatrices) {
    CMatrix neg = CMatrix::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    EXPECT_THROW((void)DensityOperator::validated(neg), InvariantViolation);
    CMatrix trace2 = CMatrix::Identity(2, 2);
    EXPECT_THROW((void)DensityOperator::validated(trace2), InvariantViolation);
    CMatrix skew = CMatrix::Identity(2, 2) * 0.5;
    skew(0, 1) = 0.1;
    EXPECT_THROW((void)DensityOperator::validated(skew), InvariantViolation);
    EXPECT_NO_THROW((void)DensityOperator::validated(CMatrix::Identity(2, 2) * 0.5));
}

TEST(RandomDensityOperator, IsValidAndRespectsRank) {
    for (std::size_t d = 2; d <= 5; ++d) {
        Rng rng = make_rng(3, d);
        const auto rho = random_density_operator(d, rng);
        EXPECT_TRUE(verify_density_operator(rho, 1e-10).passed());
        const auto pure = random_density_operator(d, rng, 1);
        EXPECT_NEAR((pure.matrix() * pure.matrix()).trace().real(), 1.0, 1e-10);
    }
}

TEST(Verify, ReportsPsdFailure) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 1.5;
    m(1, 1) = -0.5;
    const auto v = verify_density_operator(m, 1e-6);
    EXPECT_TRUE(v.hermitian());
    EXPECT_TRUE(v.unit_trace());
    EXPECT_FALSE(v.positive());
    EXPECT_FALSE(v.passed());
    EXPECT_NEAR(v.min_eigenvalue, -0.5, 1e-14);
}

TEST(TraceDistance, MatchesSvdOracle) {
    Rng rng = make_rng(4, 0);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_density_operator(4, rng).matrix();
        const auto b = random_density_operator(4, rng).matrix();
        EXPECT_NEAR(trace_distance(a, b), test::svd_trace_distance(a, b), 1e-12);
    }
    const auto p0 = DensityOperator::pure(vec({1.0, 0.0})).matrix();
    const auto p1 = DensityOperator::pure(vec({0.0, 1.0})).matrix();
    EXPECT_NEAR(trace_distance(p0, p1), 1.0, 1e-15);
}

TEST(Fit, RecoversMaximallyMixed) {
    Rng rng = make_rng(5, 0);
    const auto rho = DensityOperator::maximally_mixed(3);
    const auto fit = fit_density_operator(born_frame_function(rho), {90, false, 4}, rng);
    EXPECT_LE(test::svd_trace_distance(fit.rho.matrix(), rho.matrix()), 1e-9);
    EXPECT_LE(fit.fit_residual, 1e-12);
    EXPECT_EQ(fit.probes_used, 90u);
    EXPECT_TRUE(fit.warnings.empty());
}

TEST(Fit, RoundTripsRandomStates) {
    for (std::size_t d = 3; d <= 5; ++d) {
        for (std::uint64_t t = 0; t < 10; ++t) {
            Rng rng = make_rng(6 + d, t);
            const auto rho = random_density_operator(d, rng, t % 2 == 0 ? 1 : 0);
            const auto fit = fit_density_operator(born_frame_function(rho), {10 * d * d, false, 4}, rng);
            EXPECT_LE(test::svd_trace_distance(fit.rho.matrix(), rho.matrix()), 1e-8);
            EXPECT_TRUE(verify_density_operator(fit.rho, 1e-6).passed());
        }
    }
}

TEST(Fit, FiducialsAugmentRandomProbes) {
    Rng rng = make_rng(7, 0);
    const auto rho = random_density_operator(3, rng);
    const auto fit = fit_density_operator(born_frame_function(rho), {9, true, 1}, rng);
    EXPECT_EQ(fit.probes_used, 18u);
    EXPECT_LE(test::svd_trace_distance(fit.rho.matrix(), rho.matrix()), 1e-10);
    EXPECT_EQ(fiducial_states(3).size(), 9u);
}

TEST(Fit, PhaseInvariantFrameFunction) {
    Rng rng = make_rng(8, 0);
    const auto rho = random_density_operator(3, rng);
    const auto f = born_frame_function(rho);
    for (int t = 0; t < 20; ++t) {
        const auto psi = random_state(3, rng);
        const StateVector rotated(psi.amplitudes() * std::polar(1.0, 0.37 * t));
        EXPECT_NEAR(f(psi), f(rotated), 1e-14);
    }
}

TEST(Fit, NoisyFrameFunctionConverges) {
    Rng rng = make_rng(9, 0);
    const auto rho = random_density_operator(3, rng);
    const auto exact = born_frame_function(rho);
    auto noise_rng = std::make_shared<Rng>(make_rng(9, 1));
    const FrameFunction noisy(3, [exact, noise_rng](const StateVector &psi) {
        return exact(psi) + 1e-4 * standard_normal(*noise_rng);
    });
    const auto small = fit_density_operator(noisy, {20, false, 4}, rng);
    const auto large = fit_density_operator(noisy, {2000, false, 4}, rng);
    const double d_small = test::svd_trace_distance(small.rho.matrix(), rho.matrix());
    const double d_large = test::svd_trace_distance(large.rho.matrix(), rho.matrix());
    EXPECT_LE(d_large, 1e-4);
    EXPECT_LT(d_large, d_small);
    EXPECT_NEAR(large.fit_residual, 1e-4, 3e-5);
}

TEST(Fit, RejectsTooFewProbes) {
    Rng rng = make_rng(10, 0);
    const auto f = born_frame_function(DensityOperator::maximally_mixed(3));
    EXPECT_THROW((void)fit_density_operator(f, {8, false, 4}, rng), DomainError);
}

TEST(Fit, WarnsInDimensionTwo) {
    Rng rng = make_rng(11, 0);
    const auto f = born_frame_function(DensityOperator::maximally_mixed(2));
    const auto fit = fit_density_operator(f, {40, false, 4}, rng);
    EXPECT_FALSE(fit.warnings.empty());
}

TEST(Fit, UniformSupportIsFlagged) {
    Rng rng = make_rng(12, 0);
    const auto f = flatten_assignment(uniform_support_assignment(fixture_chi()));
    const auto fit = fit_density_operator(f, {90, true, 4}, rng);
    const auto v = verify_density_operator(fit.rho, 1e-6);
    EXPECT_TRUE(fit.fit_residual > 1e-3 || !v.positive());
}

TEST(UniformSupportAssignment, Examples) {
    const auto a = uniform_support_assignment(fixture_chi());
    const auto comp = OrthonormalBasis::computational(3);
    EXPECT_NEAR(a(comp, 0), 0.5, 1e-15);
    EXPECT_NEAR(a(comp, 1), 0.5, 1e-15);
    EXPECT_NEAR(a(comp, 2), 0.0, 1e-15);
    const auto e1 = uniform_support_assignment(vec({1.0, 0.0, 0.0}));
    EXPECT_EQ(e1(comp, 0), 1.0);
    EXPECT_EQ(e1(comp, 1), 0.0);
    const auto spread = uniform_support_assignment(vec({1.0, 1.0, 1.0}));
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NEAR(spread(comp, i), 1.0 / 3.0, 1e-15);
    }
}

TEST(Contextuality, FixtureGapIsOneSixth) {
    const auto a = uniform_support_assignment(fixture_chi());
    const auto b1 = OrthonormalBasis::computational(3);
    const OrthonormalBasis b2({vec({1.0, 0.0, 0.0}), vec({0.0, 1.0, 1.0}), vec({0.0, 1.0, -1.0})});
    EXPECT_NEAR(witness_gap(a, b1, 0, b2, 0), 1.0 / 6.0, 1e-12);
    EXPECT_THROW((void)witness_gap(a, b1, 0, b2, 1), DomainError);
}

TEST(Contextuality, DetectorFindsUniformSupportWitness) {
    const auto a = uniform_support_assignment(fixture_chi());
    const auto r = detect_contextuality(a, 1000, 1);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_GE(r.witness->gap, 0.1);
    EXPECT_NEAR(std::abs(r.witness->first_value - r.witness->second_value), r.witness->gap, 1e-15);
    EXPECT_NEAR(std::norm(inner_product(r.witness->first[r.witness->first_index], r.witness->psi)), 1.0, 1e-9);
    EXPECT_NEAR(std::norm(inner_product(r.witness->second[r.witness->second_index], r.witness->psi)), 1.0, 1e-9);
}

TEST(Contextuality, BornAssignmentHasNoWitness) {
    Rng rng = make_rng(13, 0);
    const auto a = assignment_from_frame_function(born_frame_function(random_density_operator(3, rng)));
    const auto r = detect_contextuality(a, 2000, 7);
    EXPECT_FALSE(r.witness.has_value());
    EXPECT_EQ(r.trials_run, 2000u);
}

TEST(Contextuality, WarnsInDimensionTwo) {
    const auto a = uniform_support_assignment(vec({1.0, 1.0}));
    const auto r = detect_contextuality(a, 200, 1);
    EXPECT_FALSE(r.warnings.empty());
}

TEST(Contextuality, Reproducible) {
    const auto a = uniform_support_assignment(vec({1.0, Complex{0.0, 1.0}, 1.0, 0.0}));
    const auto r1 = detect_contextuality(a, 500, 21);
    const auto r2 = detect_contextuality(a, 500, 21);
    ASSERT_EQ(r1.witness.has_value(), r2.witness.has_value());
    if (r1.witness) {
        EXPECT_EQ(r1.witness->trial, r2.witness->trial);
        EXPECT_EQ(r1.witness->gap, r2.witness->gap);
    }
}
