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
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "qdt/errors.hpp"
#include "qdt/io.hpp"
#include "support/oracles.hpp"

using namespace qdt;

namespace {

std::string parse_error_message(const std::string &text) {
    try {
        (void)parse_game(text);
    } catch (const ParseError &e) {
        return e.what();
    }
    return {};
}

bool contains(const std::string &haystack, const std::string &needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST(ParseGame, MinimalDocument) {
    const auto g = parse_game(R"({"dim": 2, "amplitudes": [[0.6, 0], [0, 0.8]], "utilities": [1, -2]})");
    EXPECT_EQ(g.dim(), 2u);
    EXPECT_EQ(g.amplitude(1), Complex(0.0, 0.8));
    EXPECT_EQ(g.utilities()[1], -2.0);
    EXPECT_NEAR(born_value(g), 0.36 - 2.0 * 0.64, 1e-14);
}

TEST(ParseGame, ExplicitEigenvectors) {
    const auto g = parse_game(R"({
        "dim": 2,
        "amplitudes": [[1, 0], [0, 0]],
        "utilities": [0, 1],
        "eigenvectors": [[[0.7071067811865476, 0], [0.7071067811865476, 0]],
                         [[0.7071067811865476, 0], [-0.7071067811865476, 0]]]
    })");
    EXPECT_NEAR(std::abs(g.eigenbasis()[1][1] + 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
}

TEST(ParseGame, ErrorsNameTheInvariant) {
    EXPECT_TRUE(contains(parse_error_message("{"), "malformed JSON"));
    EXPECT_TRUE(contains(parse_error_message(R"({"amplitudes": [], "utilities": []})"), "dim"));
    EXPECT_TRUE(contains(parse_error_message(R"({"dim": 0, "amplitudes": [], "utilities": []})"), "dim"));
    EXPECT_TRUE(contains(
        parse_error_message(R"({"dim": 2, "amplitudes": [[1, 0]], "utilities": [0, 1]})"),
        "amplitudes"));
    EXPECT_TRUE(contains(
        parse_error_message(R"({"dim": 2, "amplitudes": [[1, 0], 0], "utilities": [0, 1]})"),
        "[re, im]"));
    EXPECT_TRUE(contains(
        parse_error_message(R"({"dim": 2, "amplitudes": [[1, 0], [0, 0]], "utilities": [0]})"),
        "utilities"));
    EXPECT_TRUE(contains(
        parse_error_message(R"({"dim": 2, "amplitudes": [[1, 0], [1, 0]], "utilities": [0, 1]})"),
        "invalid game"));
    EXPECT_TRUE(contains(parse_error_message(R"({"dim": 2, "amplitudes": [[1, 0], [0, 0]],
        "utilities": [0, 1], "eigenvectors": [[[1, 0], [0, 0]], [[1, 0], [0, 0]]]})"),
                         "invalid game"));
}

TEST(WriteGame, RoundTrips) {
    for (std::uint64_t t = 0; t < 50; ++t) {
        Rng rng = make_rng(20, t);
        const std::size_t d = 2 + t % 4;
        const auto basis = random_basis(d, rng);
        const auto psi = random_state(d, rng);
        std::vector<Eigenpair> pairs;
        for (std::size_t j = 0; j < d; ++j) {
            pairs.push_back({uniform_real(rng, -10, 10), basis[j]});
        }
        const auto g = make_game(psi, pairs);
        const auto back = parse_game(write_game(g));
        EXPECT_EQ(back.utilities(), g.utilities());
        EXPECT_LE((back.state().amplitudes() - g.state().amplitudes()).cwiseAbs().maxCoeff(), 1e-15);
        EXPECT_LE((back.utility_operator().matrix() - g.utility_operator().matrix()).cwiseAbs().maxCoeff(),
                  1e-12);
        EXPECT_EQ(write_game(back), write_game(g));
    }
}

TEST(DensityFile, RoundTripAndValidation) {
    Rng rng = make_rng(21, 0);
    const auto rho = random_density_operator(3, rng);
    const auto back = parse_density_operator(write_density_operator(rho));
    EXPECT_LE(test::svd_trace_distance(back.matrix(), rho.matrix()), 1e-15);

    try {
        (void)parse_density_operator(R"({"dim": 2, "matrix": [[[1.5, 0], [0, 0]], [[0, 0], [-0.5, 0]]]})");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_TRUE(contains(e.what(), "invalid density operator"));
    }
    EXPECT_THROW((void)parse_density_operator(R"({"dim": 2, "matrix": [[[1, 0], [0, 0]]]})"), ParseError);
}

TEST(LoadFiles, MissingFileIsParseError) {
    EXPECT_THROW((void)load_game("/nonexistent/qdt/game.json"), ParseError);
    const auto path = std::filesystem::temp_directory_path() / "qdt_test_rho.json";
    {
        std::ofstream out(path);
        out << write_density_operator(DensityOperator::maximally_mixed(2));
    }
    EXPECT_NEAR(load_density_operator(path).matrix()(1, 1).real(), 0.5, 1e-15);
    std::filesystem::remove(path);
}
