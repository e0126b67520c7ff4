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
#include "qdt/transforms.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "qdt/errors.hpp"

namespace qdt {

namespace {

std::string compact(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

MonotoneTransform::MonotoneTransform(std::string name,
                                     std::function<double(double)> forward,
                                     std::function<double(double)> inverse,
                                     Interval domain)
    : name_(std::move(name)), forward_(std::move(forward)),
      inverse_(std::move(inverse)), domain_(domain) {}

double MonotoneTransform::forward(double x) const {
    if (!domain_.contains(x)) {
        throw DomainError("transform " + name_ + ": utility " + std::to_string(x) +
                          " outside domain");
    }
    return forward_(x);
}

double MonotoneTransform::inverse(double y) const { return inverse_(y); }

MonotoneTransform MonotoneTransform::identity() {
    return {"identity", [](double x) { return x; }, [](double y) { return y; }, {}};
}

MonotoneTransform MonotoneTransform::exponential(double rate) {
    if (rate == 0.0 || !std::isfinite(rate)) {
        throw DomainError("exponential transform: rate must be finite and nonzero");
    }
    return {"exp:" + compact(rate),
            [rate](double x) { return std::expm1(rate * x) / rate; },
            [rate](double y) { return std::log1p(rate * y) / rate; },
            {}};
}

MonotoneTransform MonotoneTransform::power(double exponent) {
    if (!(exponent > 0.0) || !std::isfinite(exponent)) {
        throw DomainError("power transform: exponent must be positive");
    }
    return {"power:" + compact(exponent),
            [exponent](double x) { return std::pow(x, exponent); },
            [exponent](double y) { return std::pow(y, 1.0 / exponent); },
            Interval{0.0, std::numeric_limits<double>::infinity()}};
}

MonotoneTransform MonotoneTransform::parse(const std::string &text) {
    const auto colon = text.find(':');
    const std::string family = text.substr(0, colon);
    double parameter = 1.0;
    if (colon != std::string::npos) {
        try {
            std::size_t used = 0;
            parameter = std::stod(text.substr(colon + 1), &used);
            if (used != text.size() - colon - 1) {
                throw ParseError("trailing characters");
            }
        } catch (const std::exception &) {
            throw ParseError("transform '" + text + "': malformed parameter");
        }
    }
    if (family == "identity" && colon == std::string::npos) {
        return identity();
    }
    if (family == "exp") {
        return exponential(parameter);
    }
    if (family == "power") {
        return power(parameter);
    }
    throw ParseError("unknown transform '" + text + "'");
}

std::vector<MonotoneTransform> builtin_transforms() {
    return {MonotoneTransform::identity(), MonotoneTransform::exponential(1.0),
            MonotoneTransform::exponential(-0.5), MonotoneTransform::power(0.5),
            MonotoneTransform::power(2.0)};
}

} // namespace qdt
