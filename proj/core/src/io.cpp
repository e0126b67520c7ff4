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
#include "qdt/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qdt/errors.hpp"

namespace qdt {

namespace {

using nlohmann::json;

json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const json &field(const json &doc, const char *name) {
    if (!doc.is_object() || !doc.contains(name)) {
        throw ParseError(std::string("missing field '") + name + "'");
    }
    return doc.at(name);
}

std::size_t read_dim(const json &doc) {
    const json &d = field(doc, "dim");
    if (!d.is_number_integer() || d.get<long long>() < 1) {
        throw ParseError("dim: must be a positive integer");
    }
    return d.get<std::size_t>();
}

Complex read_complex(const json &value, const std::string &where) {
    if (!value.is_array() || value.size() != 2 || !value[0].is_number() ||
        !value[1].is_number()) {
        throw ParseError(where + ": complex numbers are [re, im] pairs");
    }
    return {value[0].get<double>(), value[1].get<double>()};
}

CVector read_complex_vector(const json &value, std::size_t dim, const std::string &where) {
    if (!value.is_array()) {
        throw ParseError(where + ": expected a list");
    }
    if (value.size() != dim) {
        throw ParseError(where + ": length must equal dim (" + std::to_string(value.size()) +
                         " vs " + std::to_string(dim) + ")");
    }
    CVector v(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        v(static_cast<Eigen::Index>(i)) =
            read_complex(value[i], where + "[" + std::to_string(i) + "]");
    }
    return v;
}

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

} // namespace

QuantumGame parse_game(std::string_view json_text) {
    const json doc = parse_document(json_text);
    const std::size_t dim = read_dim(doc);
    CVector amplitudes = read_complex_vector(field(doc, "amplitudes"), dim, "amplitudes");

    const json &u = field(doc, "utilities");
    if (!u.is_array() || u.size() != dim) {
        throw ParseError("utilities: must be a list whose length equals dim");
    }
    std::vector<double> utilities;
    for (const auto &x : u) {
        if (!x.is_number()) {
            throw ParseError("utilities: entries must be real numbers");
        }
        utilities.push_back(x.get<double>());
    }

    try {
        OrthonormalBasis basis = OrthonormalBasis::computational(dim);
        if (doc.contains("eigenvectors")) {
            const json &ev = doc.at("eigenvectors");
            if (!ev.is_array() || ev.size() != dim) {
                throw ParseError("eigenvectors: must list exactly dim vectors");
            }
            std::vector<StateVector> vectors;
            for (std::size_t j = 0; j < dim; ++j) {
                vectors.emplace_back(read_complex_vector(
                    ev[j], dim, "eigenvectors[" + std::to_string(j) + "]"));
            }
            basis = OrthonormalBasis(std::move(vectors));
        }
        return QuantumGame(std::move(basis), std::move(utilities), std::move(amplitudes));
    } catch (const InvariantViolation &e) {
        throw ParseError(std::string("invalid game: ") + e.what());
    }
}

QuantumGame load_game(const std::filesystem::path &path) {
    return parse_game(read_file(path));
}

std::string write_game(const QuantumGame &game) {
    json doc;
    doc["dim"] = game.dim();
    json amplitudes = json::array();
    for (std::size_t j = 0; j < game.dim(); ++j) {
        amplitudes.push_back(complex_to_json(game.amplitude(j)));
    }
    doc["amplitudes"] = std::move(amplitudes);
    doc["utilities"] = game.utilities();
    json vectors = json::array();
    for (const auto &v : game.eigenbasis()) {
        json row = json::array();
        for (std::size_t i = 0; i < v.dim(); ++i) {
            row.push_back(complex_to_json(v[i]));
        }
        vectors.push_back(std::move(row));
    }
    doc["eigenvectors"] = std::move(vectors);
    return doc.dump(2);
}

DensityOperator parse_density_operator(std::string_view json_text) {
    const json doc = parse_document(json_text);
    const std::size_t dim = read_dim(doc);
    const json &rows = field(doc, "matrix");
    if (!rows.is_array() || rows.size() != dim) {
        throw ParseError("matrix: must have dim rows");
    }
    const auto n = static_cast<Eigen::Index>(dim);
    CMatrix m(n, n);
    for (std::size_t r = 0; r < dim; ++r) {
        m.row(static_cast<Eigen::Index>(r)) =
            read_complex_vector(rows[r], dim, "matrix[" + std::to_string(r) + "]")
                .transpose();
    }
    try {
        return DensityOperator::validated(std::move(m));
    } catch (const InvariantViolation &e) {
        throw ParseError(std::string("invalid density operator: ") + e.what());
    }
}

DensityOperator load_density_operator(const std::filesystem::path &path) {
    return parse_density_operator(read_file(path));
}

std::string write_density_operator(const DensityOperator &rho) {
    json doc;
    doc["dim"] = rho.dim();
    json rows = json::array();
    for (Eigen::Index r = 0; r < rho.matrix().rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < rho.matrix().cols(); ++c) {
            row.push_back(complex_to_json(rho.matrix()(r, c)));
        }
        rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    return doc.dump(2);
}

} // namespace qdt
