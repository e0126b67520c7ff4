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
#include "qdt/registry.hpp"

#include <algorithm>

namespace qdt {

bool FunctionalEntry::expects_pass(Axiom axiom) const noexcept {
    return std::find(expected_pass.begin(), expected_pass.end(), axiom) !=
           expected_pass.end();
}

const std::vector<FunctionalEntry> &functional_registry() {
    static const std::vector<FunctionalEntry> registry{
        {"born",
         "squared-amplitude expectation sum_j |lambda_j|^2 x_j",
         ValueFunctional::born(),
         {Axiom::Pivotal, Axiom::Displacement, Axiom::ZeroSum, Axiom::SumRelation,
          Axiom::HiddenAssumption}},
        {"uniform",
         "arithmetic mean of the utilities with nonzero amplitude",
         ValueFunctional::uniform_support(),
         {Axiom::Pivotal, Axiom::Displacement, Axiom::ZeroSum, Axiom::SumRelation,
          Axiom::HiddenAssumption, Axiom::GeneralSwap}},
        {"deterministic",
         "utility of the first eigenstate with nonzero amplitude",
         ValueFunctional::deterministic(),
         {Axiom::Displacement, Axiom::ZeroSum, Axiom::SumRelation}},
    };
    return registry;
}

const FunctionalEntry *find_functional(std::string_view name) {
    const auto &registry = functional_registry();
    const auto it = std::find_if(registry.begin(), registry.end(),
                                 [name](const FunctionalEntry &e) { return e.name == name; });
    return it == registry.end() ? nullptr : &*it;
}

} // namespace qdt
