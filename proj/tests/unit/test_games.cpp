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
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "qdt/errors.hpp"
#include "qdt/games.hpp"
#include "support/oracles.hpp"

using namespace qdt;

namespace {

const double kH = 1.0 / std::sqrt(2.0);

QuantumGame computational_game(std::vector<Complex> amplitudes, std::vector<double> utilities) {
    CVector a(static_cast<Eigen::Index>(amplitudes.size()));
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        a(static_cast<Eigen::Index>(i)) = amplitudes[i];
    }
    return QuantumGame(OrthonormalBasis::computational(amplitudes.size()), std::move(utilities),
                       a);
}

QuantumGame random_game(std::size_t d, Rng &rng) {
    const auto basis = random_basis(d, rng);
    const auto psi = random_state(d, rng);
    std::vector<Eigenpair> pairs;
    for (std::size_t j = 0; j < d; ++j) {
        pairs.push_back({uniform_real(rng, -10.0, 10.0), basis[j]});
    }
    return make_game(psi, pairs);
}

} // namespace

TEST(MakeGame, BasisStateAmplitudes) {
    const auto e1 = StateVector::basis_vector(2, 0);
    const auto e2 = StateVector::basis_vector(2, 1);
    const std::vector<Eigenpair> pairs{{5.0, e1}, {9.0, e2}};
    const auto g = make_game(e1, pairs);
    EXPECT_EQ(g.amplitude(0), Complex(1.0));
    EXPECT_EQ(g.amplitude(1), Complex(0.0));
}

TEST(MakeGame, EqualSuperposition) {
    CVector v(2);
    v << 1.0, 1.0;
    const auto psi = StateVector::normalized(v);
    const std::vector<Eigenpair> pairs{{0.0, StateVector::basis_vector(2, 0)},
                                       {1.0, StateVector::basis_vector(2, 1)}};
    const auto g = make_game(psi, pairs);
    EXPECT_NEAR(g.amplitude(0).real(), kH, 1e-15);
    EXPECT_NEAR(g.amplitude(1).real(), kH, 1e-15);
}

TEST(MakeGame, Errors) {
    const auto e1 = StateVector::basis_vector(2, 0);
    const std::vector<Eigenpair> repeated{{1.0, e1}, {2.0, e1}};
    EXPECT_THROW((void)make_game(e1, repeated), InvariantViolation);
    const std::vector<Eigenpair> wrong_dim{{1.0, StateVector::basis_vector(3, 0)},
                                           {2.0, StateVector::basis_vector(3, 1)}};
    EXPECT_THROW((void)make_game(e1, wrong_dim), DimensionMismatch);
}

TEST(QuantumGame, RejectsUnnormalizedAmplitudes) {
    EXPECT_THROW(computational_game({1.0, 1.0}, {0.0, 1.0}), InvariantViolation);
    EXPECT_THROW(computational_game({1.0, 0.0}, {0.0}), InvariantViolation);
}

TEST(Displace, Examples) {
    const auto g = computational_game({kH, kH}, {1.0, 2.0});
    EXPECT_EQ(displace(g, 0.0).utilities(), g.utilities());
    EXPECT_EQ(displace(g, -3.0).utilities(), (std::vector<double>{-2.0, -1.0}));
    // k = -x1 - x2 maps (x1, x2) to (-x2, -x1).
    const double x1 = 1.75;
    const double x2 = -4.5;
    const auto h = displace(computational_game({kH, kH}, {x1, x2}), -x1 - x2);
    EXPECT_EQ(h.utilities(), (std::vector<double>{-x2, -x1}));
    EXPECT_EQ(h.amplitudes(), g.amplitudes());
}

TEST(Negate, Examples) {
    EXPECT_EQ(negate(computational_game({1.0, 0.0}, {0.0, 0.0})).utilities(),
              (std::vector<double>{0.0, 0.0}));
    const auto g = computational_game({0.6, 0.8}, {1.0, -2.0});
    EXPECT_EQ(negate(g).utilities(), (std::vector<double>{-1.0, 2.0}));
    EXPECT_EQ(negate(negate(g)).utilities(), g.utilities());
}

TEST(SwapUtilities, Examples) {
    const auto g = computational_game({0.6, 0.8}, {3.0, 7.0});
    EXPECT_EQ(swap_utilities(g, 1, 1).utilities(), g.utilities());
    EXPECT_EQ(swap_utilities(g, 0, 1).utilities(), (std::vector<double>{7.0, 3.0}));
    EXPECT_EQ(swap_utilities(swap_utilities(g, 0, 1), 0, 1).utilities(), g.utilities());
    EXPECT_EQ(swap_utilities(g, 0, 1).amplitudes(), g.amplitudes());
    EXPECT_THROW((void)swap_utilities(g, 0, 2), DomainError);
}

TEST(BornValue, Examples) {
    EXPECT_NEAR(born_value(computational_game({kH, kH}, {2.0, 5.0})), 3.5, 1e-14);
    EXPECT_EQ(born_value(computational_game({1.0, 0.0}, {2.0, 5.0})), 2.0);
    EXPECT_NEAR(born_value(computational_game({0.6, 0.8}, {0.0, 1.0})), 0.64, 1e-15);
}

TEST(UniformSupportValue, Examples) {
    EXPECT_NEAR(uniform_support_value(computational_game({0.6, 0.8}, {2.0, 5.0})), 3.5, 1e-15);
    EXPECT_EQ(uniform_support_value(computational_game({1.0, 0.0}, {3.0, 7.0})), 3.0);
    EXPECT_NEAR(uniform_support_value(computational_game({0.5, 0.5, kH}, {1.0, 2.0, 6.0})), 3.0,
                1e-15);
}

TEST(DeterministicValue, Examples) {
    const double x1 = -1.25;
    const double x2 = 6.5;
    // First game of the sum relation carries utilities (x2, x1).
    EXPECT_EQ(deterministic_value(computational_game({kH, kH}, {x2, x1})), x2);
    EXPECT_EQ(deterministic_value(computational_game({kH, kH}, {x1, x2})), x1);
    EXPECT_EQ(deterministic_value(computational_game({0.0, 1.0}, {3.0, 7.0})), 7.0);
}

TEST(FMeanValue, Examples) {
    const auto g = computational_game({0.6, 0.8}, {0.0, 1.0});
    const auto id = MonotoneTransform::identity();
    EXPECT_NEAR(fmean_value(g, born_probabilities(g), id), born_value(g), 1e-15);

    const auto ex = MonotoneTransform::exponential(1.0);
    const std::vector<double> half{0.5, 0.5};
    EXPECT_NEAR(fmean_value(computational_game({kH, kH}, {0.0, 0.0}), half, ex), 0.0, 1e-15);
    // ln((1 + e)/2), frozen from an independent evaluation.
    EXPECT_NEAR(fmean_value(g, half, ex), 0.6201145069582775, 1e-12);
}

TEST(FMeanValue, Errors) {
    const auto g = computational_game({0.6, 0.8}, {-1.0, 1.0});
    const std::vector<double> bad_sum{0.5, 0.6};
    const std::vector<double> negative{-0.5, 1.5};
    const std::vector<double> half{0.5, 0.5};
    EXPECT_THROW((void)fmean_value(g, bad_sum, MonotoneTransform::identity()), DomainError);
    EXPECT_THROW((void)fmean_value(g, negative, MonotoneTransform::identity()), DomainError);
    EXPECT_THROW((void)fmean_value(g, half, MonotoneTransform::power(2.0)), DomainError);
}

TEST(EmptySupport, Guarded) {
    // epsilon above every amplitude.
    const auto g = computational_game({kH, kH}, {1.0, 2.0});
    EXPECT_THROW((void)uniform_support_value(g, 0.9), DegenerateInput);
    EXPECT_THROW((void)deterministic_value(g, 0.9), DegenerateInput);
}

TEST(BornValue, MatchesUtilityOperatorExpectation) {
    for (std::size_t t = 0; t < 1000; ++t) {
        Rng rng = make_rng(555, t);
        const auto g = random_game(2 + t % 4, rng);
        const double via_matrix =
            test::loop_expectation(g.utility_operator().matrix(), g.state().amplitudes()).real();
        EXPECT_NEAR(born_value(g), via_matrix, 1e-9);
        EXPECT_NEAR(born_value(g), expectation(g.utility_operator(), g.state()), 1e-9);
    }
}

TEST(BornValue, DisplacementShiftsValue) {
    for (std::size_t t = 0; t < 500; ++t) {
        Rng rng = make_rng(556, t);
        const auto g = random_game(2 + t % 4, rng);
        const double k = uniform_real(rng, -10.0, 10.0);
        EXPECT_NEAR(born_value(displace(g, k)), born_value(g) + k, 1e-9);
    }
}

TEST(ValueFunctional, TransitiveOrderingSmoke) {
    const std::vector<ValueFunctional> functionals{
        ValueFunctional::born(), ValueFunctional::uniform_support(),
        ValueFunctional::deterministic(),
        ValueFunctional::fmean(MonotoneTransform::exponential(0.3), born_probabilities, "born")};
    for (const auto &V : functionals) {
        for (std::size_t t = 0; t < 300; ++t) {
            Rng rng = make_rng(557, t);
            const double a = V(random_game(3, rng));
            const double b = V(random_game(3, rng));
            const double c = V(random_game(3, rng));
            if (a >= b && b >= c) {
                EXPECT_GE(a, c) << V.name();
            }
        }
    }
}

TEST(ValueFunctional, DeterministicOnEqualGames) {
    Rng a(9);
    Rng b(9);
    const auto g1 = random_game(4, a);
    const auto g2 = random_game(4, b);
    for (const auto &V : {ValueFunctional::born(), ValueFunctional::uniform_support(),
                          ValueFunctional::deterministic()}) {
        EXPECT_EQ(V(g1), V(g2));
    }
}

TEST(UniformSupportValue, PermutationInvariant) {
    for (std::size_t t = 0; t < 300; ++t) {
        Rng rng = make_rng(558, t);
        const std::size_t d = 2 + t % 4;
        // Zero out a random subset of amplitudes so the support is nontrivial.
        auto g = random_game(d, rng);
        CVector a = g.amplitudes();
        for (Eigen::Index i = 0; i + 1 < a.size(); ++i) {
            if (uniform_real(rng, 0.0, 1.0) < 0.4) {
                a(i) = 0.0;
            }
        }
        a.normalize();
        g = QuantumGame(g.eigenbasis(), g.utilities(), a);
        std::vector<std::size_t> perm(d);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_NEAR(uniform_support_value(permute(g, perm)), uniform_support_value(g), 1e-12);
    }
}

TEST(FMeanValue, MonotoneInEachUtility) {
    for (const auto &F : builtin_transforms()) {
        for (std::size_t t = 0; t < 200; ++t) {
            Rng rng = make_rng(559, t);
            auto g = random_game(3, rng);
            std::vector<double> x = g.utilities();
            for (double &v : x) {
                v = uniform_real(rng, 0.0, 10.0); // inside every built-in domain
            }
            g = g.with_utilities(x);
            const auto p = born_probabilities(g);
            const std::size_t j = t % 3;
            std::vector<double> raised = x;
            raised[j] += uniform_real(rng, 0.0, 5.0);
            EXPECT_GE(fmean_value(g.with_utilities(raised), p, F) + 1e-12, fmean_value(g, p, F))
                << F.name();
        }
    }
}

TEST(MonotoneTransform, InverseAndMonotonicity) {
    for (const auto &F : builtin_transforms()) {
        double previous = -std::numeric_limits<double>::infinity();
        for (int i = 0; i <= 200; ++i) {
            const double x = 0.05 * i; // [0, 10] lies in every domain
            const double y = F.forward(x);
            EXPECT_GT(y, previous) << F.name();
            previous = y;
            EXPECT_NEAR(F.inverse(y), x, 1e-9) << F.name();
        }
    }
    EXPECT_THROW((void)MonotoneTransform::exponential(0.0), DomainError);
    EXPECT_THROW((void)MonotoneTransform::power(-1.0), DomainError);
    EXPECT_THROW((void)MonotoneTransform::power(2.0).forward(-1.0), DomainError);
}

TEST(MonotoneTransform, Parse) {
    EXPECT_EQ(MonotoneTransform::parse("identity").name(), "identity");
    EXPECT_EQ(MonotoneTransform::parse("exp").name(), "exp:1");
    EXPECT_EQ(MonotoneTransform::parse("exp:-0.5").name(), "exp:-0.5");
    EXPECT_EQ(MonotoneTransform::parse("power:2").name(), "power:2");
    EXPECT_THROW((void)MonotoneTransform::parse("cubic"), ParseError);
    EXPECT_THROW((void)MonotoneTransform::parse("exp:abc"), ParseError);
}
