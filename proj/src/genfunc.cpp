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

#include "interfere/genfunc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "interfere/combinat.hpp"
#include "interfere/error.hpp"
#include "interfere/numeric.hpp"
#include "interfere/permdet.hpp"
#include "interfere/transition.hpp"

namespace interfere {

namespace {

constexpr double kSingularThreshold = 1e-14;

double reciprocal(double denominator) {
    if (std::abs(denominator) < kSingularThreshold) {
        throw Error(ErrorKind::SingularDenominator, "generating-function denominator vanishes", denominator);
    }
    return 1.0 / denominator;
}

double monomial(const std::vector<double> &vars, const Occupation &powers) {
    double out = 1.0;
    for (std::size_t s = 0; s < vars.size(); ++s) {
        for (int e = 0; e < powers[s]; ++e) out *= vars[s];
    }
    return out;
}

}  // namespace

void validate_duals(const DualVariables &duals, std::size_t modes) {
    auto check = [modes](const std::vector<double> &v, const char *name) {
        if (v.size() != modes) {
            throw Error(ErrorKind::InvalidArgument, std::string(name) + " has " + std::to_string(v.size()) +
                                                        " components, expected " + std::to_string(modes));
        }
        for (double c : v) {
            if (!(c >= 0.0 && c < 1.0)) {
                throw Error(ErrorKind::InvalidArgument,
                            std::string(name) + " component " + std::to_string(c) + " is outside [0, 1)", c);
            }
        }
    };
    check(duals.x, "x");
    check(duals.z, "z");
}

double gf_closed_form(const UnitaryMatrix &u, const DualVariables &duals) {
    validate_duals(duals, u.size());
    const auto n = static_cast<Eigen::Index>(u.size());
    Eigen::VectorXcd x(n), z(n);
    for (Eigen::Index s = 0; s < n; ++s) {
        x(s) = duals.x[static_cast<std::size_t>(s)];
        z(s) = duals.z[static_cast<std::size_t>(s)];
    }
    const ComplexMatrix &m = u.matrix();
    const ComplexMatrix k = m.adjoint() * z.asDiagonal() * m * x.asDiagonal();
    const Complex det = determinant(ComplexMatrix::Identity(n, n) - k).value;
    return reciprocal(det.real());
}

double gf_minor_expansion(const UnitaryMatrix &u, const DualVariables &duals) {
    validate_duals(duals, u.size());
    const std::size_t n = u.size();
    std::vector<double> by_size(n + 1, 0.0);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t mm = 0; mm <= static_cast<std::int64_t>(n); ++mm) {
        const auto m = static_cast<std::size_t>(mm);
        const std::vector<Subset> subsets = enumerate_subsets(n, m);
        CompensatedSum<double> acc;
        for (const Subset &beta : subsets) {
            double z_beta = 1.0;
            for (std::size_t s : beta.indices) z_beta *= duals.z[s];
            for (const Subset &alpha : subsets) {
                double x_alpha = 1.0;
                for (std::size_t s : alpha.indices) x_alpha *= duals.x[s];
                const double minor = std::norm(determinant(minor_keep(u.matrix(), beta, alpha)).value);
                acc.add(z_beta * minor * x_alpha);
            }
        }
        by_size[m] = (m % 2 == 0 ? 1.0 : -1.0) * acc.value();
    }
    CompensatedSum<double> total;
    for (double v : by_size) total.add(v);
    return reciprocal(total.value());
}

SeriesValue gf_truncated_series(const UnitaryMatrix &u, const DualVariables &duals, int cutoff,
                                std::size_t max_terms) {
    validate_duals(duals, u.size());
    if (cutoff < 0) throw Error(ErrorKind::InvalidArgument, "series cutoff must be non-negative");
    const std::size_t n = u.size();

    double pair_count = 0.0;
    for (int t = 0; t <= cutoff; ++t) {
        const double c = binomial(static_cast<std::size_t>(t) + n - 1, n - 1);
        pair_count += c * c;
    }
    if (pair_count > static_cast<double>(max_terms)) {
        throw Error(ErrorKind::BudgetExceeded,
                    "series needs " + std::to_string(static_cast<long double>(pair_count)) +
                        " pattern pairs, cap is " + std::to_string(max_terms),
                    pair_count);
    }

    SeriesValue out;
    out.terms = static_cast<std::size_t>(pair_count);
    CompensatedSum<double> total;
    for (int t = 0; t <= cutoff; ++t) {
        const std::vector<Occupation> patterns = enumerate_occupations(n, t, max_terms);
        std::vector<double> per_input(patterns.size(), 0.0);
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t a = 0; a < static_cast<std::int64_t>(patterns.size()); ++a) {
            const Occupation &input = patterns[static_cast<std::size_t>(a)];
            const double x_part = monomial(duals.x, input);
            if (x_part == 0.0) continue;
            CompensatedSum<double> acc;
            for (const Occupation &output : patterns) {
                const double z_part = monomial(duals.z, output);
                if (z_part == 0.0) continue;
                acc.add(permanent_weight(u.matrix(), output, input) * z_part);
            }
            per_input[static_cast<std::size_t>(a)] = x_part * acc.value();
        }
        for (double v : per_input) total.add(v);
    }
    out.value = total.value();

    const double ratio = *std::max_element(duals.x.begin(), duals.x.end()) *
                         *std::max_element(duals.z.begin(), duals.z.end());
    if (ratio > 0.0) {
        CompensatedSum<double> tail;
        for (int t = cutoff + 1; t < cutoff + 100000; ++t) {
            const double term = binomial(static_cast<std::size_t>(t) + n - 1, n - 1) * std::pow(ratio, t);
            tail.add(term);
            if (term < 1e-18 * tail.value() || term == 0.0) break;
        }
        out.tail_bound = tail.value();
    }
    return out;
}

}  // namespace interfere
