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

#ifndef INTERFERE_TRANSITION_HPP
#define INTERFERE_TRANSITION_HPP

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "interfere/matrix.hpp"
#include "interfere/types.hpp"

namespace interfere {

/// Caps applied to pattern enumerations and identity checks.
struct Budget {
    std::size_t max_modes = 10;
    int max_particles = 8;
};

/// Throws BudgetExceeded if the pattern uses more modes or particles than allowed.
void require_within(const Budget &budget, const PatternPair &pattern);

struct TransitionTriple {
    double boson = 0.0;
    double fermion = 0.0;
    double classical = 0.0;
};

enum class Statistics { Boson, Fermion, Classical };

std::string_view to_string(Statistics statistics);
/// "boson" | "fermion" | "classical"; throws InvalidArgument otherwise.
Statistics parse_statistics(std::string_view text);

/// |per(A_{rows,cols})|^2 / (rows! cols!). Zero when the totals differ.
double permanent_weight(const ComplexMatrix &a, const Occupation &rows, const Occupation &cols);

/// |det(A_{rows,cols})|^2 / (rows! cols!). Zero when the totals differ or
/// when any count exceeds one (a repeated line has vanishing determinant).
double determinant_weight(const ComplexMatrix &a, const Occupation &rows, const Occupation &cols);

/// B = |per(U_{n,i})|^2 / (n! i!), n the output and i the input pattern.
double boson_prob(const UnitaryMatrix &u, const PatternPair &pattern);
/// F = |det(U_{n,i})|^2, zero for occupations above one.
double fermion_prob(const UnitaryMatrix &u, const PatternPair &pattern);
/// C = per(M_{n,i}) / n! with M_kl = |U_kl|^2. Equal to per / (n! i!) for
/// inputs with at most one particle per mode; for repeated inputs the i!
/// would break normalization.
double classical_prob(const UnitaryMatrix &u, const PatternPair &pattern);

TransitionTriple transition_triple(const UnitaryMatrix &u, const PatternPair &pattern);

/// Output patterns in enumerate_occupations order with their probabilities.
using Distribution = std::vector<std::pair<Occupation, double>>;

/// Probabilities over every output with the input's particle number.
/// Outputs are evaluated in parallel and stored in enumeration order.
Distribution output_distribution(const UnitaryMatrix &u, const Occupation &input, Statistics statistics,
                                 const Budget &budget = {});

/// Memoized B/F/C weights for one matrix (which need not be unitary). Not
/// thread-safe: give each worker its own cache.
class PatternCache {
public:
    explicit PatternCache(ComplexMatrix a);

    const ComplexMatrix &matrix() const noexcept { return a_; }
    std::size_t modes() const noexcept { return static_cast<std::size_t>(a_.rows()); }

    double boson(const Occupation &input, const Occupation &output);
    double fermion(const Occupation &input, const Occupation &output);
    double classical(const Occupation &input, const Occupation &output);

private:
    static std::string key(const Occupation &input, const Occupation &output);

    ComplexMatrix a_;
    ComplexMatrix m_;
    std::unordered_map<std::string, double> boson_;
    std::unordered_map<std::string, double> fermion_;
    std::unordered_map<std::string, double> classical_;
};

/// A probability prepared for printing: values within 1e-9 outside [0, 1]
/// are clamped, anything further out is kept and flagged.
struct DisplayProbability {
    double value;
    bool anomaly;
};
DisplayProbability display_probability(double raw);

}  // namespace interfere

#endif
