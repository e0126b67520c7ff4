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
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli/commands.hpp"
#include "qdt/io.hpp"

using namespace qdt::cli;

namespace {

struct Captured {
    int code;
    std::string out;
    std::string err;
};

Captured invoke(std::vector<std::string> args, std::optional<std::string> env_seed = std::nullopt) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err, env_seed);
    return {code, out.str(), err.str()};
}

const std::vector<std::vector<std::string>> kCommands{
    {"axioms", "--functional", "born", "--trials", "50", "--dim", "2,3"},
    {"pivotal", "--trials", "20"},
    {"gleason-fit", "--dim", "3"},
    {"contextuality", "--dim", "3", "--trials", "100"},
    {"insufficient-reason"},
};

} // namespace

TEST(Cli, ExitCodes) {
    EXPECT_EQ(invoke({"axioms", "--functional", "born", "--trials", "100"}).code, kExitOk);
    EXPECT_EQ(invoke({"axioms", "--functional", "deterministic", "--trials", "100"}).code, kExitOk);
    EXPECT_EQ(invoke({"axioms", "--functional", "nosuch"}).code, kExitUsage);
    EXPECT_EQ(invoke({"axioms", "--bogus-flag"}).code, kExitUsage);
    EXPECT_EQ(invoke({}).code, kExitUsage);
    EXPECT_EQ(invoke({"gleason-fit", "--dim", "3"}).code, kExitOk);
    EXPECT_EQ(invoke({"gleason-fit", "--dim", "3", "--generator", "uniform-support"}).code,
              kExitCheckFailed);
    EXPECT_EQ(invoke({"gleason-fit", "--dim", "3", "--rho", "/nonexistent/rho.json"}).code,
              kExitInput);
    EXPECT_EQ(invoke({"insufficient-reason", "--pairs", "3:3"}).code, kExitCheckFailed);
    EXPECT_EQ(invoke({"insufficient-reason", "--transform", "cubic"}).code, kExitUsage);
}

TEST(Cli, ReportsAreByteIdenticalOnRerun) {
    for (const auto &base : kCommands) {
        for (const std::string format : {"json", "markdown", "csv"}) {
            auto args = base;
            args.insert(args.end(), {"--format", format});
            const auto first = invoke(args);
            const auto second = invoke(args);
            EXPECT_FALSE(first.out.empty()) << base[0] << " " << format;
            EXPECT_EQ(first.out, second.out) << base[0] << " " << format;
            EXPECT_EQ(first.code, second.code);
        }
    }
}

TEST(Cli, ConfigEchoInEveryFormat) {
    for (const auto &base : kCommands) {
        auto json_args = base;
        json_args.insert(json_args.end(), {"--seed", "77"});
        EXPECT_NE(invoke(json_args).out.find("\"seed\": \"77\""), std::string::npos) << base[0];
        auto csv_args = json_args;
        csv_args.insert(csv_args.end(), {"--format", "csv"});
        EXPECT_NE(invoke(csv_args).out.find("# seed=77"), std::string::npos) << base[0];
        auto md_args = json_args;
        md_args.insert(md_args.end(), {"--format", "markdown"});
        EXPECT_NE(invoke(md_args).out.find("| seed | 77 |"), std::string::npos) << base[0];
    }
}

TEST(Cli, EnvironmentSeedIsUsedUnlessOverridden) {
    const std::vector<std::string> args{"axioms", "--trials", "30"};
    const auto from_env = invoke(args, "5");
    const auto explicit_seed = invoke({"axioms", "--trials", "30", "--seed", "5"});
    EXPECT_EQ(from_env.out, explicit_seed.out);
    EXPECT_NE(from_env.out, invoke(args).out);
    const auto flag_wins = invoke({"axioms", "--trials", "30", "--seed", "1"}, "5");
    EXPECT_EQ(flag_wins.out, invoke(args).out);
    EXPECT_EQ(invoke(args, "not-a-number").code, kExitUsage);
}

TEST(Cli, ContextualityReportsFixtureGap) {
    const auto r = invoke({"contextuality", "--dim", "3", "--trials", "10", "--format", "csv"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("0.166666666667"), std::string::npos);
}

TEST(Cli, DimensionTwoWarnsOnStderr) {
    const auto r = invoke({"contextuality", "--dim", "2", "--trials", "50"});
    EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, GameFileIsChecked) {
    const auto path = std::filesystem::temp_directory_path() / "qdt_cli_game.json";
    {
        std::ofstream out(path);
        out << R"({"dim": 2, "amplitudes": [[0.6, 0], [0.8, 0]], "utilities": [0, 1]})";
    }
    const auto r = invoke({"axioms", "--trials", "10", "--game", path.string()});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("0.28"), std::string::npos);
    {
        std::ofstream out(path);
        out << R"({"dim": 2, "amplitudes": [[1, 0], [1, 0]], "utilities": [0, 1]})";
    }
    const auto bad = invoke({"axioms", "--trials", "10", "--game", path.string()});
    EXPECT_EQ(bad.code, kExitInput);
    EXPECT_NE(bad.err.find("invalid game"), std::string::npos);
    std::filesystem::remove(path);
}
