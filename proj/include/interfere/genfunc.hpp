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

#ifndef INTERFERE_GENFUNC_HPP
#define INTERFERE_GENFUNC_HPP

#include <cstddef>
#include <vector>

#include "interfere/matrix.hpp"

namespace interfere {

/// Input (x) and output (z) dual variables, each component in [0, 1).
struct DualVariables {
    std::vector<double> x;
    std::vector<double> z;
};

/// Throws InvalidArgument unless both vectors have `modes` entries in [0, 1).
void validate_duals(const DualVariables &duals, std::size_t modes);

/// 1 / det(I - U^dagger Z U X). Throws SingularDenominator when |det| < 1e-14.
double gf_closed_form(const UnitaryMatrix &u, const DualVariables &duals);

/// Reciprocal of sum_m (-1)^m sum_{alpha,beta in R_m} z_beta |det U_{beta,alpha}|^2 x_alpha,
/// evaluated term by term over all pairs of equal-size subsets.
double gf_minor_expansion(const UnitaryMatrix &u, const DualVariables &duals);

inline constexpr std::size_t kDefaultSeriesTermCap = 20'000'000;

struct SeriesValue {
    double value = 0.0;
    /// Geometric estimate sum_{t > cutoff} #patterns(t) (max x * max z)^t.
    /// Advisory only.
    double tail_bound = 0.0;
    std::size_t terms = 0;
};

/// Partial sum of B_n^(i) x^i z^n over |i| = |n| <= cutoff. Throws
/// BudgetExceeded when the number of (i, n) pairs exceeds max_terms.
SeriesValue gf_truncated_series(const UnitaryMatrix &u, const DualVariables &duals, int cutoff,
                                std::size_t max_terms = kDefaultSeriesTermCap);

}  // namespace interfere

#endif
