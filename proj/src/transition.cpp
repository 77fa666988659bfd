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

#include "interfere/transition.hpp"

#include <cstdint>
#include <string>

#include "interfere/combinat.hpp"
#include "interfere/error.hpp"
#include "interfere/permdet.hpp"

namespace interfere {

namespace {

void require_dims(const ComplexMatrix &a, const Occupation &input, const Occupation &output) {
    const auto n = static_cast<std::size_t>(a.rows());
    if (input.size() != n || output.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "pattern lengths (" + std::to_string(input.size()) + ", " +
                                                      std::to_string(output.size()) + ") do not match " +
                                                      std::to_string(n) + " modes");
    }
}

double factorial_norm(const Occupation &rows, const Occupation &cols) {
    return static_cast<double>(factorial_product(rows)) * static_cast<double>(factorial_product(cols));
}

// Distinguishable particles are labelled on the input side, so only the
// output multiplicities are divided out.
double classical_weight(const ComplexMatrix &m, const Occupation &output, const Occupation &input) {
    return permanent_repeated(m, output, input).real() / static_cast<double>(factorial_product(output));
}

}  // namespace

void require_within(const Budget &budget, const PatternPair &pattern) {
    const std::size_t modes = std::max(pattern.input.size(), pattern.output.size());
    if (modes > budget.max_modes) {
        throw Error(ErrorKind::BudgetExceeded,
                    std::to_string(modes) + " modes exceed the budget of " + std::to_string(budget.max_modes),
                    static_cast<double>(modes));
    }
    const int particles = std::max(pattern.input.total(), pattern.output.total());
    if (particles > budget.max_particles) {
        throw Error(ErrorKind::BudgetExceeded,
                    std::to_string(particles) + " particles exceed the budget of " +
                        std::to_string(budget.max_particles),
                    particles);
    }
}

std::string_view to_string(Statistics statistics) {
    switch (statistics) {
        case Statistics::Boson: return "boson";
        case Statistics::Fermion: return "fermion";
        case Statistics::Classical: return "classical";
    }
    return "unknown";
}

Statistics parse_statistics(std::string_view text) {
    if (text == "boson") return Statistics::Boson;
    if (text == "fermion") return Statistics::Fermion;
    if (text == "classical") return Statistics::Classical;
    throw Error(ErrorKind::InvalidArgument, "unknown statistics '" + std::string(text) + "'");
}

double permanent_weight(const ComplexMatrix &a, const Occupation &rows, const Occupation &cols) {
    if (rows.total() != cols.total()) return 0.0;
    if (rows.total() == 0) return 1.0;
    return std::norm(permanent_repeated(a, rows, cols)) / factorial_norm(rows, cols);
}

double determinant_weight(const ComplexMatrix &a, const Occupation &rows, const Occupation &cols) {
    if (rows.total() != cols.total() || !rows.is_binary() || !cols.is_binary()) return 0.0;
    if (rows.total() == 0) return 1.0;
    return std::norm(determinant(submatrix_by_occupation(a, rows, cols)).value);
}

double boson_prob(const UnitaryMatrix &u, const PatternPair &pattern) {
    require_dims(u.matrix(), pattern.input, pattern.output);
    return permanent_weight(u.matrix(), pattern.output, pattern.input);
}

double fermion_prob(const UnitaryMatrix &u, const PatternPair &pattern) {
    require_dims(u.matrix(), pattern.input, pattern.output);
    return determinant_weight(u.matrix(), pattern.output, pattern.input);
}

double classical_prob(const UnitaryMatrix &u, const PatternPair &pattern) {
    require_dims(u.matrix(), pattern.input, pattern.output);
    if (pattern.input.total() != pattern.output.total()) return 0.0;
    if (pattern.input.total() == 0) return 1.0;
    return classical_weight(classical_matrix(u), pattern.output, pattern.input);
}

TransitionTriple transition_triple(const UnitaryMatrix &u, const PatternPair &pattern) {
    return {boson_prob(u, pattern), fermion_prob(u, pattern), classical_prob(u, pattern)};
}

Distribution output_distribution(const UnitaryMatrix &u, const Occupation &input, Statistics statistics,
                                 const Budget &budget) {
    if (input.size() != u.size()) {
        throw Error(ErrorKind::DimensionMismatch, "input pattern length does not match the interferometer");
    }
    require_within(budget, {input, input});
    if (statistics == Statistics::Fermion && !input.is_binary()) {
        throw Error(ErrorKind::UnsupportedPattern, "fermionic inputs must have at most one particle per mode");
    }
    const std::vector<Occupation> outputs = enumerate_occupations(u.size(), input.total());
    Distribution out(outputs.size());
    const ComplexMatrix m = classical_matrix(u);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(outputs.size()); ++k) {
        const Occupation &n = outputs[static_cast<std::size_t>(k)];
        double p = 0.0;
        switch (statistics) {
            case Statistics::Boson: p = permanent_weight(u.matrix(), n, input); break;
            case Statistics::Fermion: p = determinant_weight(u.matrix(), n, input); break;
            case Statistics::Classical:
                p = classical_weight(m, n, input);
                break;
        }
        out[static_cast<std::size_t>(k)] = {n, p};
    }
    return out;
}

PatternCache::PatternCache(ComplexMatrix a) : a_(std::move(a)), m_(classical_matrix(a_)) {
    if (a_.rows() != a_.cols()) throw Error(ErrorKind::NotSquare, "pattern cache needs a square matrix");
}

std::string PatternCache::key(const Occupation &input, const Occupation &output) {
    std::string k;
    k.reserve(input.size() + output.size());
    for (int c : input.counts()) k.push_back(static_cast<char>(c));
    for (int c : output.counts()) k.push_back(static_cast<char>(c));
    return k;
}

double PatternCache::boson(const Occupation &input, const Occupation &output) {
    require_dims(a_, input, output);
    if (input.total() != output.total()) return 0.0;
    auto [it, inserted] = boson_.try_emplace(key(input, output), 0.0);
    if (inserted) it->second = permanent_weight(a_, output, input);
    return it->second;
}

double PatternCache::fermion(const Occupation &input, const Occupation &output) {
    require_dims(a_, input, output);
    if (input.total() != output.total() || !input.is_binary() || !output.is_binary()) return 0.0;
    auto [it, inserted] = fermion_.try_emplace(key(input, output), 0.0);
    if (inserted) it->second = determinant_weight(a_, output, input);
    return it->second;
}

double PatternCache::classical(const Occupation &input, const Occupation &output) {
    require_dims(a_, input, output);
    if (input.total() != output.total()) return 0.0;
    if (input.total() == 0) return 1.0;
    auto [it, inserted] = classical_.try_emplace(key(input, output), 0.0);
    if (inserted) it->second = classical_weight(m_, output, input);
    return it->second;
}

DisplayProbability display_probability(double raw) {
    constexpr double slack = 1e-9;
    if (raw < 0.0) return raw >= -slack ? DisplayProbability{0.0, false} : DisplayProbability{raw, true};
    if (raw > 1.0) return raw <= 1.0 + slack ? DisplayProbability{1.0, false} : DisplayProbability{raw, true};
    return {raw, false};
}

}  // namespace interfere
