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
#include "cli/report.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include <fmt/format.h>

namespace qdt::cli {

namespace {

std::string csv_escape(const std::string &cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) {
        return cell;
    }
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string md_escape(const std::string &cell) {
    std::string out;
    for (char c : cell) {
        if (c == '|') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

std::string render_json(const Report &r) {
    nlohmann::ordered_json doc;
    doc["command"] = r.command;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    for (const auto &[k, v] : r.config) {
        config[k] = v;
    }
    doc["config"] = std::move(config);
    for (const auto &[k, v] : r.body.items()) {
        doc[k] = v;
    }
    if (!r.notes.empty()) {
        doc["notes"] = r.notes;
    }
    return doc.dump(2) + "\n";
}

std::string render_markdown(const Report &r) {
    std::ostringstream os;
    os << "# qdt " << r.command << "\n\n";
    os << "| setting | value |\n|---|---|\n";
    for (const auto &[k, v] : r.config) {
        os << "| " << md_escape(k) << " | " << md_escape(v) << " |\n";
    }
    for (const auto &note : r.notes) {
        os << "\n> " << note << "\n";
    }
    for (const auto &t : r.tables) {
        os << "\n## " << t.title << "\n\n|";
        for (const auto &c : t.columns) {
            os << ' ' << md_escape(c) << " |";
        }
        os << "\n|";
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            os << "---|";
        }
        os << '\n';
        for (const auto &row : t.rows) {
            os << '|';
            for (const auto &cell : row) {
                os << ' ' << md_escape(cell) << " |";
            }
            os << '\n';
        }
    }
    return os.str();
}

std::string render_csv(const Report &r) {
    std::ostringstream os;
    os << "# command=" << r.command << '\n';
    for (const auto &[k, v] : r.config) {
        os << "# " << k << '=' << v << '\n';
    }
    for (const auto &note : r.notes) {
        os << "# note: " << note << '\n';
    }
    for (const auto &t : r.tables) {
        os << "# table: " << t.title << '\n';
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            os << (i ? "," : "") << csv_escape(t.columns[i]);
        }
        os << '\n';
        for (const auto &row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << (i ? "," : "") << csv_escape(row[i]);
            }
            os << '\n';
        }
    }
    return os.str();
}

} // namespace

std::string_view format_name(Format f) noexcept {
    switch (f) {
    case Format::Json:
        return "json";
    case Format::Markdown:
        return "markdown";
    case Format::Csv:
        return "csv";
    }
    return "json";
}

std::string num(double v) { return fmt::format("{:.12g}", v); }

nlohmann::ordered_json jnum(double v) {
    if (!std::isfinite(v)) {
        return nullptr;
    }
    return std::stod(num(v));
}

std::string render(const Report &report, Format format) {
    switch (format) {
    case Format::Json:
        return render_json(report);
    case Format::Markdown:
        return render_markdown(report);
    case Format::Csv:
        return render_csv(report);
    }
    return render_json(report);
}

} // namespace qdt::cli
