// Copyright 2026 The interfere Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "interfere/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "interfere/error.hpp"
#include "interfere/matrix.hpp"

namespace interfere {

ComplexMatrix parse_matrix_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::InvalidArgument, std::string("matrix file is not valid JSON: ") + e.what());
    }
    try {
        const auto rows = doc.at("rows").get<long long>();
        const auto cols = doc.at("cols").get<long long>();
        const auto &entries = doc.at("entries");
        if (rows <= 0 || cols <= 0) throw Error(ErrorKind::InvalidArgument, "rows and cols must be positive");
        if (!entries.is_array() || static_cast<long long>(entries.size()) != rows * cols) {
            throw Error(ErrorKind::InvalidArgument, "entries must hold rows*cols [re, im] pairs");
        }
        ComplexMatrix m(rows, cols);
        for (long long k = 0; k < rows * cols; ++k) {
            const auto &e = entries[static_cast<std::size_t>(k)];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                throw Error(ErrorKind::InvalidArgument, "entry " + std::to_string(k) + " is not a [re, im] pair");
            }
            m(k / cols, k % cols) = Complex(e[0].get<double>(), e[1].get<double>());
        }
        require_finite(m);
        return m;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::InvalidArgument, std::string("matrix file is missing fields: ") + e.what());
    }
}

ComplexMatrix load_matrix_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open matrix file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix_json(buffer.str());
}

std::string matrix_to_json(const ComplexMatrix &m) {
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back({m(r, c).real(), m(r, c).imag()});
    }
    nlohmann::json doc = {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
    return doc.dump();
}

}  // namespace interfere
