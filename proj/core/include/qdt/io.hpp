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
 * @file io.hpp
 * JSON documents for games and density operators.
 *
 * Game:
 *   { "dim": 2,
 *     "amplitudes": [[re, im], ...],      // lambda_j in the eigenbasis
 *     "utilities": [x_1, ...],
 *     "eigenvectors": [[[re, im], ...], ...] }   // optional, default e_j
 *
 * Density operator:
 *   { "dim": 3, "matrix": [[[re, im], ...], ...] }   // row-major
 *
 * Parse failures raise ParseError; a well-formed document that breaks a
 * type invariant raises ParseError whose message names the invariant.
 */
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qdt/games.hpp"
#include "qdt/gleason.hpp"

namespace qdt {

[[nodiscard]] QuantumGame parse_game(std::string_view json_text);
[[nodiscard]] QuantumGame load_game(const std::filesystem::path &path);
[[nodiscard]] std::string write_game(const QuantumGame &game);

[[nodiscard]] DensityOperator parse_density_operator(std::string_view json_text);
[[nodiscard]] DensityOperator load_density_operator(const std::filesystem::path &path);
[[nodiscard]] std::string write_density_operator(const DensityOperator &rho);

} // namespace qdt
