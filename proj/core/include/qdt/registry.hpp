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
 * @file registry.hpp
 * Built-in value functionals together with the axioms each is documented
 * to satisfy. Suite runs compare against these expectations, so a change in
 * which axioms a rule satisfies shows up as a regression.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qdt/axioms.hpp"
#include "qdt/games.hpp"

namespace qdt {

struct FunctionalEntry {
    std::string name;
    std::string summary;
    ValueFunctional functional;
    std::vector<Axiom> expected_pass;

    [[nodiscard]] bool expects_pass(Axiom axiom) const noexcept;
};

/// born, uniform, deterministic, in that order.
[[nodiscard]] const std::vector<FunctionalEntry> &functional_registry();

/// nullptr when `name` is not registered.
[[nodiscard]] const FunctionalEntry *find_functional(std::string_view name);

} // namespace qdt
