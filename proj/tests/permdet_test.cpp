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

#include "interfere/permdet.hpp"

#include <algorithm>
#include <numeric>

#include "gtest/gtest.h"

#include "interfere/matrix.hpp"
#include "interfere/numeric.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace interfere;

TEST(permanent, definitional_cases) {
    EXPECT_EQ(permanent(ComplexMatrix::Identity(3, 3)).value, Complex(1, 0));
    EXPECT_NEAR(std::abs(permanent(ComplexMatrix::Ones(3, 3)).value - 6.0), 0.0, 1e-12);
    ComplexMatrix a(2, 2);
    a << 1, 2, 3, 4;
    EXPECT_NEAR(std::abs(permanent(a).value - 10.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(permanent_serial(a).value - 10.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(permanent_naive(a).value - 10.0), 0.0, 1e-12);
}

TEST(permanent, shape_conventions) {
    const MatrixFunctionValue empty = permanent(ComplexMatrix(0, 0));
    EXPECT_EQ(empty.value, Complex(1, 0));
    EXPECT_TRUE(empty.convention_applied);
    const MatrixFunctionValue rect = permanent(ComplexMatrix::Ones(2, 3));
    EXPECT_EQ(rect.value, Complex(0, 0));
    EXPECT_TRUE(rect.convention_applied);
    EXPECT_FALSE(permanent(ComplexMatrix::Ones(2, 2)).convention_applied);
    EXPECT_EQ(permanent_naive(ComplexMatrix(0, 0)).value, Complex(1, 0));
    ComplexMatrix one(1, 1);
    one << Complex(0.3, -2);
    EXPECT_EQ(permanent_naive(one).value, Complex(0.3, -2));
    EXPECT_EQ(permanent(one).value, Complex(0.3, -2));
    EXPECT_NEAR(std::abs(permanent_naive(ComplexMatrix::Ones(4, 4)).value - 24.0), 0.0, 1e-12);
}

TEST(permanent, size_caps) {
    EXPECT_EQ(kind_of([] { permanent(ComplexMatrix::Ones(21, 21)); }), ErrorKind::SizeLimit);
    EXPECT_EQ(kind_of([] { permanent_naive(ComplexMatrix::Ones(10, 10)); }), ErrorKind::SizeLimit);
    EXPECT_EQ(kind_of([] { permanent(ComplexMatrix::Ones(5, 5), 4); }), ErrorKind::SizeLimit);
    ComplexMatrix bad = ComplexMatrix::Ones(3, 3);
    bad(1, 1) = Complex(std::numeric_limits<double>::infinity(), 0);
    EXPECT_EQ(kind_of([&] { permanent(bad); }), ErrorKind::InvalidArgument);
}

TEST(permanent, matches_independent_oracle) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 1 + seed % 7;
        const ComplexMatrix a = oracle::random_complex(n, seed);
        const Complex expected = oracle::brute_permanent(a);
        EXPECT_LE(relative_error(permanent(a).value, expected), 1e-10) << "n=" << n;
        EXPECT_LE(relative_error(permanent_serial(a).value, expected), 1e-10) << "n=" << n;
        EXPECT_LE(relative_error(permanent_naive(a).value, expected), 1e-10) << "n=" << n;
    }
}

TEST(permanent, parallel_matches_serial_above_threshold) {
    for (std::size_t n : {12u, 13u, 15u}) {
        const ComplexMatrix a = haar_random_unitary(n, n).matrix();
        EXPECT_LE(relative_error(permanent(a).value, permanent_serial(a).value), 1e-12) << n;
    }
}

TEST(permanent, invariant_under_row_and_column_permutations) {
    std::mt19937_64 rng(17);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = 2 + seed % 6;
        const ComplexMatrix a = oracle::random_complex(n, 1000 + seed);
        std::vector<int> pr(n), pc(n);
        std::iota(pr.begin(), pr.end(), 0);
        std::iota(pc.begin(), pc.end(), 0);
        std::shuffle(pr.begin(), pr.end(), rng);
        std::shuffle(pc.begin(), pc.end(), rng);
        ComplexMatrix b(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) b(r, c) = a(pr[r], pc[c]);
        }
        EXPECT_LE(relative_error(permanent(a).value, permanent(b).value), 1e-10);
        const Complex da = determinant(a).value, db = determinant(b).value;
        EXPECT_LE(std::min(relative_error(da, db), relative_error(da, -db)), 1e-10);
    }
}

TEST(permanent, row_scaling_is_linear) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = 1 + seed % 7;
        ComplexMatrix a = oracle::random_complex(n, 2000 + seed);
        const Complex c(0.7, -1.3);
        const Complex per = permanent(a).value, det = determinant(a).value;
        a.row(static_cast<Eigen::Index>(seed % n)) *= c;
        EXPECT_LE(relative_error(permanent(a).value, c * per), 1e-10);
        EXPECT_LE(relative_error(determinant(a).value, c * det), 1e-10);
    }
}

TEST(determinant, definitional_cases) {
    for (std::size_t n = 0; n <= 6; ++n) EXPECT_NEAR(std::abs(determinant(ComplexMatrix::Identity(n, n)).value - 1.0), 0, 1e-15);
    ComplexMatrix a(2, 2);
    a << 1, 2, 3, 4;
    EXPECT_NEAR(std::abs(determinant(a).value + 2.0), 0.0, 1e-12);
    const MatrixFunctionValue rect = determinant(ComplexMatrix::Ones(2, 3));
    EXPECT_EQ(rect.value, Complex(0, 0));
    EXPECT_TRUE(rect.convention_applied);
    EXPECT_EQ(determinant(ComplexMatrix::Ones(3, 3)).value, Complex(0, 0));
}

TEST(determinant, matches_laplace_expansion) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 1 + seed % 7;
        const ComplexMatrix a = oracle::random_complex(n, 3000 + seed);
        EXPECT_LE(relative_error(determinant(a).value, oracle::laplace_det(a)), 1e-10);
    }
}

TEST(permanent_repeated, matches_expanded_matrix) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t modes = 1 + trial % 4;
        const ComplexMatrix a = oracle::random_complex(modes, 4000 + static_cast<std::uint64_t>(trial));
        const int total = trial % 6;
        auto draw = [&] {
            std::vector<int> v(modes, 0);
            for (int p = 0; p < total; ++p) ++v[rng() % modes];
            return Occupation(v);
        };
        const Occupation rows = draw(), cols = draw();
        const Complex expected = oracle::brute_permanent(oracle::expand(a, rows, cols));
        EXPECT_LE(relative_error(permanent_repeated(a, rows, cols), expected), 1e-10)
            << rows.to_string() << " / " << cols.to_string();
    }
}

TEST(permanent_repeated, conventions_and_limits) {
    const ComplexMatrix a = oracle::random_complex(3, 1);
    EXPECT_EQ(permanent_repeated(a, {0, 0, 0}, {0, 0, 0}), Complex(1, 0));
    EXPECT_EQ(permanent_repeated(a, {1, 0, 0}, {1, 1, 0}), Complex(0, 0));
    EXPECT_EQ(kind_of([&] { permanent_repeated(a, {5, 0, 0}, {0, 5, 0}, 4); }), ErrorKind::SizeLimit);
    EXPECT_EQ(kind_of([&] { permanent_repeated(a, {1, 0}, {1, 0, 0}); }), ErrorKind::DimensionMismatch);
}

TEST(compensated_sum, recovers_cancelled_terms) {
    CompensatedSum<double> s;
    s.add(1e16);
    s.add(1.0);
    s.add(-1e16);
    EXPECT_EQ(s.value(), 1.0);
    CompensatedSum<Complex> z;
    z.add({1e16, -1e16});
    z.add({1.0, 2.0});
    z.add({-1e16, 1e16});
    EXPECT_EQ(z.value(), Complex(1.0, 2.0));
}

TEST(relative_error, absolute_near_zero) {
    EXPECT_EQ(relative_error(0.0, 1e-12), 1e-12);
    EXPECT_NEAR(relative_error(100.0, 101.0), 1.0 / 101.0, 1e-15);
}
