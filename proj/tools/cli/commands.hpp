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
 * @file commands.hpp
 * The qdt subcommands. Each command is a pure function of its RunConfig
 * (including the seed) and returns a report plus an exit status, so output
 * is byte-identical across reruns.
 *
 * Exit status:
 *   0  success; every documented expectation held
 *   1  a check failed: a documented-pass axiom failed, a fit was flagged as
 *      non-quantum or inaccurate, or the solver was underdetermined
 *   2  usage error (bad flag, unknown functional/generator/transform)
 *   3  input file could not be read or violates a type invariant
 *   4  unexpected internal error
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/report.hpp"

namespace qdt::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitInput = 3,
    kExitInternal = 4,
};

inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr const char *kSeedEnvVar = "QDT_SEED";
/// A fit whose RMS residual exceeds this is flagged as not representable
/// by any density operator.
inline constexpr double kFitResidualFlag = 1e-3;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::vector<std::size_t> dims;
    std::size_t trials = 1000;
    /// Per-command default when unset.
    std::optional<double> tol;
    std::uint64_t seed = kDefaultSeed;
    Format format = Format::Json;

    // axioms
    std::string functional = "born";
    std::optional<std::string> game_file;

    // gleason-fit
    std::string generator = "maximally-mixed";
    std::optional<std::string> rho_file;
    std::size_t probes = 0; // 0 means 10 * dim^2
    bool fiducials = false;

    // contextuality
    std::string assignment = "uniform";

    // insufficient-reason
    std::string transform = "all";
    std::string pairs = "0:1";
};

struct CommandOutcome {
    int exit_code;
    Report report;
};

[[nodiscard]] CommandOutcome cmd_axioms(const RunConfig &config);
[[nodiscard]] CommandOutcome cmd_gleason_fit(const RunConfig &config);
[[nodiscard]] CommandOutcome cmd_contextuality(const RunConfig &config);
[[nodiscard]] CommandOutcome cmd_pivotal(const RunConfig &config);
[[nodiscard]] CommandOutcome cmd_insufficient_reason(const RunConfig &config);

/// Full CLI: parses `args` (without the program name), runs the command and
/// writes the rendered report to `out`, diagnostics to `err`. `env_seed` is
/// the value of QDT_SEED, if set; an explicit --seed wins over it.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err,
        const std::optional<std::string> &env_seed = std::nullopt);

} // namespace qdt::cli
