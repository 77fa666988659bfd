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

#include <cmath>

#include "gtest/gtest.h"

#include "interfere/combinat.hpp"
#include "interfere/matrix.hpp"
#include "interfere/numeric.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace interfere;

namespace {

DualVariables uniform(std::size_t n, double x, double z) {
    return {std::vector<double>(n, x), std::vector<double>(n, z)};
}

}  // namespace

TEST(gf_closed_form, trivial_points) {
    const UnitaryMatrix u = haar_random_unitary(3, 1);
    EXPECT_NEAR(gf_closed_form(u, uniform(3, 0, 0)), 1.0, 1e-15);
    EXPECT_NEAR(gf_closed_form(u, {{0.7, 0, 0}, {0, 0, 0}}), 1.0, 1e-15);
    EXPECT_NEAR(gf_minor_expansion(u, uniform(3, 0, 0)), 1.0, 1e-15);
    EXPECT_NEAR(gf_truncated_series(u, uniform(3, 0, 0), 5).value, 1.0, 1e-15);
}

TEST(gf_closed_form, matches_truncated_series) {
    const UnitaryMatrix u = haar_random_unitary(3, 11);
    const DualVariables d = uniform(3, 0.3, 0.3);
    const SeriesValue s = gf_truncated_series(u, d, 14);
    EXPECT_NEAR(gf_closed_form(u, d), s.value, 1e-6);
    EXPECT_GT(s.terms, 0u);
    EXPECT_GT(s.tail_bound, 0.0);

    const DualVariables b = uniform(2, 0.2, 0.2);
    EXPECT_NEAR(gf_closed_form(balanced_beamsplitter(), b), gf_truncated_series(balanced_beamsplitter(), b, 10).value,
                1e-6);
}

TEST(gf_minor_expansion, single_mode) {
    ComplexMatrix m(1, 1);
    m << Complex(std::cos(0.4), std::sin(0.4));
    const UnitaryMatrix u = validate_unitary(m);
    const double a = 0.6, b = 0.7;
    EXPECT_NEAR(gf_minor_expansion(u, {{a}, {b}}), 1.0 / (1.0 - a * b), 1e-14);
    EXPECT_NEAR(gf_closed_form(u, {{a}, {b}}), 1.0 / (1.0 - a * b), 1e-14);
}

TEST(gf_minor_expansion, equals_closed_form) {
    const UnitaryMatrix u = haar_random_unitary(4, 3);
    const DualVariables d = uniform(4, 0.25, 0.25);
    EXPECT_LE(relative_error(gf_closed_form(u, d), gf_minor_expansion(u, d)), 1e-12);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> dist(0.0, 0.95);
    for (std::size_t n = 1; n <= 6; ++n) {
        const UnitaryMatrix v = haar_random_unitary(n, 40 + n);
        for (int draw = 0; draw < 5; ++draw) {
            DualVariables r{std::vector<double>(n), std::vector<double>(n)};
            for (std::size_t k = 0; k < n; ++k) {
                r.x[k] = dist(rng);
                r.z[k] = dist(rng);
            }
            EXPECT_LE(relative_error(gf_closed_form(v, r), gf_minor_expansion(v, r)), 1e-12);
        }
    }
}

TEST(gf_truncated_series, matches_oracle_partial_sum) {
    const UnitaryMatrix u = haar_random_unitary(3, 21);
    const DualVariables d{{0.2, 0.5, 0.1}, {0.4, 0.3, 0.6}};
    double expected = 0.0;
    for (int t = 0; t <= 3; ++t) {
        for (const Occupation &in : enumerate_occupations(3, t)) {
            for (const Occupation &out : enumerate_occupations(3, t)) {
                double mono = 1.0;
                for (std::size_t k = 0; k < 3; ++k) mono *= std::pow(d.x[k], in[k]) * std::pow(d.z[k], out[k]);
                expected += oracle::boson(u.matrix(), in, out) * mono;
            }
        }
    }
    EXPECT_NEAR(gf_truncated_series(u, d, 3).value, expected, 1e-13);
}

TEST(gf_truncated_series, monotone_in_cutoff_and_bounded_by_closed_form) {
    const UnitaryMatrix u = haar_random_unitary(3, 5);
    const DualVariables d = uniform(3, 0.4, 0.4);
    double previous = 0.0;
    for (int cutoff = 0; cutoff <= 10; ++cutoff) {
        const double v = gf_truncated_series(u, d, cutoff).value;
        EXPECT_GE(v, previous);
        previous = v;
    }
    EXPECT_LE(previous, gf_closed_form(u, d) + 1e-12);
    EXPECT_EQ(gf_truncated_series(u, d, 0).value, 1.0);
    EXPECT_EQ(gf_truncated_series(u, {{0.5, 0.5, 0.5}, {0, 0, 0}}, 6).value, 1.0);
}

TEST(gf_truncated_series, term_cap) {
    EXPECT_EQ(kind_of([] { gf_truncated_series(haar_random_unitary(4, 1), uniform(4, 0.1, 0.1), 10, 1000); }),
              ErrorKind::BudgetExceeded);
}

// Coefficient of x_1 z_1 recovered from the closed form equals the
// single-particle boson probability |U_11|^2.
TEST(gf_closed_form, encodes_single_particle_coefficient) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const UnitaryMatrix u = haar_random_unitary(3, 60 + seed);
        auto leading = [&](double s) {
            return (gf_closed_form(u, {{s, 0, 0}, {s, 0, 0}}) - 1.0) / (s * s);
        };
        const double s = 1e-2;
        const double extracted = (4.0 * leading(s / 2) - leading(s)) / 3.0;
        EXPECT_NEAR(extracted, std::norm(u(0, 0)), 1e-6);
    }
}

TEST(validate_duals, domain) {
    const UnitaryMatrix u = haar_random_unitary(2, 1);
    EXPECT_EQ(kind_of([&] { gf_closed_form(u, {{1.0, 0}, {0, 0}}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([&] { gf_closed_form(u, {{-0.1, 0}, {0, 0}}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([&] { gf_closed_form(u, {{0.1}, {0, 0}}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([&] { gf_minor_expansion(u, {{0.1, std::nan("")}, {0, 0}}); }), ErrorKind::InvalidArgument);
}
