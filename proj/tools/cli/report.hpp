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
 * @file report.hpp
 * Report documents shared by all CLI commands and their three renderings.
 * Every number is printed with 12 significant digits.
 */
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qdt::cli {

enum class Format { Json, Markdown, Csv };

[[nodiscard]] std::string_view format_name(Format f) noexcept;

struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    std::string command;
    /// Key/value echo of the effective configuration.
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::string> notes;
    std::vector<Table> tables;
    /// Machine-readable body; `command` and `config` are prepended on render.
    nlohmann::ordered_json body = nlohmann::ordered_json::object();
};

/// %.12g
[[nodiscard]] std::string num(double v);
/// JSON number rounded to 12 significant digits (null for non-finite).
[[nodiscard]] nlohmann::ordered_json jnum(double v);

[[nodiscard]] std::string render(const Report &report, Format format);

} // namespace qdt::cli
