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
 * @file transforms.hpp
 * Strictly increasing utility transforms with closed-form inverses, used by
 * F-mean (certainty-equivalent) valuations.
 */
#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace qdt {

struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    [[nodiscard]] bool contains(double x) const noexcept { return x >= lo && x <= hi; }
};

class MonotoneTransform {
  public:
    MonotoneTransform(std::string name, std::function<double(double)> forward,
                      std::function<double(double)> inverse, Interval domain);

    [[nodiscard]] const std::string &name() const noexcept { return name_; }
    [[nodiscard]] const Interval &domain() const noexcept { return domain_; }

    /// Throws DomainError outside the declared domain.
    [[nodiscard]] double forward(double x) const;
    [[nodiscard]] double inverse(double y) const;

    [[nodiscard]] static MonotoneTransform identity();
    /// x -> (exp(a x) - 1) / a; strictly increasing for every a != 0.
    [[nodiscard]] static MonotoneTransform exponential(double rate);
    /// x -> x^p on [0, inf) for p > 0.
    [[nodiscard]] static MonotoneTransform power(double exponent);

    /// Parses "identity", "exp", "exp:<a>", "power:<p>".
    [[nodiscard]] static MonotoneTransform parse(const std::string &text);

  private:
    std::string name_;
    std::function<double(double)> forward_;
    std::function<double(double)> inverse_;
    Interval domain_;
};

/// One representative of each built-in family (identity, exp:1, exp:-0.5,
/// power:0.5, power:2).
[[nodiscard]] std::vector<MonotoneTransform> builtin_transforms();

} // namespace qdt
