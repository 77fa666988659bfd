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

#include "interfere/identities.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "interfere/combinat.hpp"
#include "interfere/matrix.hpp"
#include "interfere/parallel.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace interfere;

namespace {

const UnitaryMatrix kBeamsplitter = balanced_beamsplitter();
const UnitaryMatrix kFourier3 = fourier_matrix(3);

void expect_consistent(const IdentityReport &r) {
    EXPECT_GE(r.term_count, 1u);
    EXPECT_GE(r.normalizer, 1.0);
    EXPECT_DOUBLE_EQ(r.residual, std::abs(r.raw_residual) / r.normalizer);
}

}  // namespace

TEST(term_ledger, normalizer_and_residual) {
    TermLedger l;
    l.add(0.5);
    l.add(-0.25);
    l.add(-0.25);
    EXPECT_EQ(l.raw(), 0.0);
    EXPECT_EQ(l.normalizer(), 2.0);
    EXPECT_EQ(l.count(), 3u);
    TermLedger m;
    m.add(3.0);
    EXPECT_EQ(m.residual(), 0.75);
}

TEST(recurrence, vacuum_and_small_cases) {
    const IdentityReport vac = check_lemma2(haar_random_unitary(3, 1), {{0, 0, 0}, {0, 0, 0}});
    EXPECT_TRUE(vac.passed);
    EXPECT_EQ(vac.term_count, 1u);
    expect_consistent(vac);
    const IdentityReport hom = check_lemma2(kBeamsplitter, {{1, 1}, {1, 1}});
    EXPECT_LE(hom.residual, 1e-12);
    expect_consistent(hom);
    const IdentityReport r = check_lemma2(haar_random_unitary(4, 2), {{1, 1, 1, 0}, {0, 1, 1, 1}});
    EXPECT_LE(r.residual, 1e-10);
    EXPECT_TRUE(r.passed);
}

TEST(boson_fermion_convolution, hand_checked_cases) {
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            const IdentityReport r = check_theorem1(haar_random_unitary(3, 9),
                                                    {Occupation::from_modes(3, {a}), Occupation::from_modes(3, {b})});
            EXPECT_EQ(r.term_count, 2u);
            EXPECT_LE(std::abs(r.raw_residual), 1e-15);
        }
    }
    const IdentityReport hom = check_theorem1(kBeamsplitter, {{1, 1}, {1, 1}});
    EXPECT_LE(hom.residual, 1e-12);
    expect_consistent(hom);
    EXPECT_LE(check_theorem1(kFourier3, {{1, 1, 1}, {1, 1, 1}}).residual, 1e-12);
    const IdentityReport vac = check_theorem1(kBeamsplitter, {{0, 0}, {0, 0}});
    EXPECT_TRUE(vac.passed);
}

// Exchanging the roles of B and F leaves the signed sum unchanged.
TEST(boson_fermion_convolution, swap_symmetry) {
    const UnitaryMatrix u = haar_random_unitary(3, 33);
    for (const PatternPair &p : all_pattern_pairs(3, 3)) {
        const IdentityReport f = check_theorem1(u, p, {}, ConvolutionOrder::FermionFirst);
        const IdentityReport b = check_theorem1(u, p, {}, ConvolutionOrder::BosonFirst);
        EXPECT_TRUE(f.passed);
        EXPECT_TRUE(b.passed);
        EXPECT_NEAR(f.raw_residual, b.raw_residual, 1e-12);
    }
}

TEST(matrix_convolution, hand_checked_cases) {
    EXPECT_TRUE(check_theorem2(ComplexMatrix::Zero(2, 2), {{1, 1}, {1, 1}}).passed);
    const IdentityReport id = check_theorem2(ComplexMatrix::Identity(2, 2), {{1, 1}, {1, 1}});
    EXPECT_LE(id.residual, 1e-15);
    EXPECT_TRUE(id.passed);
    const IdentityReport r = check_theorem2(random_disk_matrix(4, 6), {{1, 1, 1, 1}, {1, 1, 1, 1}});
    EXPECT_LE(r.residual, 1e-10);
    expect_consistent(r);
}

TEST(matrix_convolution, dilation_route_agrees) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ComplexMatrix a = random_disk_matrix(3, seed);
        const Theorem2CrossCheck c = cross_check_theorem2(a, {{1, 0, 1}, {0, 2, 0}});
        EXPECT_TRUE(c.direct.passed);
        EXPECT_TRUE(c.dilated.passed);
        EXPECT_TRUE(c.consistent);
        EXPECT_EQ(c.dilation_size, 6u);
    }
}

TEST(minor_identities, hand_checked_cases) {
    ComplexMatrix one(1, 1);
    one << Complex(0.4, 0.9);
    EXPECT_LE(check_corollary1(one).residual, 1e-15);
    EXPECT_LE(check_muir(one).residual, 1e-15);
    EXPECT_LE(check_corollary1(ComplexMatrix::Identity(3, 3)).residual, 1e-15);
    ComplexMatrix two(2, 2);
    two << 1, Complex(0, 2), -3, 4;
    EXPECT_LE(check_muir(two).residual, 1e-15);
    EXPECT_LE(check_corollary1(oracle::random_complex(5, 1)).residual, 1e-10);
    EXPECT_LE(check_muir(oracle::random_complex(6, 2)).residual, 1e-10);
    EXPECT_EQ(kind_of([] { check_corollary1(ComplexMatrix::Identity(9, 9)); }), ErrorKind::SizeLimit);
    EXPECT_EQ(kind_of([] { check_muir(ComplexMatrix::Identity(11, 11)); }), ErrorKind::SizeLimit);
}

TEST(classical_convolution, collapses_and_beamsplitter) {
    const UnitaryMatrix u = haar_random_unitary(3, 4);
    const PatternPair p{{2, 1, 0}, {0, 1, 2}};
    EXPECT_LE(check_classical_convolution(u, p, {0, 0, 0}).residual, 1e-15);
    EXPECT_LE(check_classical_convolution(u, p, {2, 1, 0}).residual, 1e-15);
    const IdentityReport bs = check_classical_convolution(kBeamsplitter, {{1, 1}, {1, 1}}, {1, 0});
    EXPECT_LE(bs.residual, 1e-15);
    EXPECT_EQ(bs.term_count, 3u);
    for (const Occupation &j : dominated_vectors(p.input)) EXPECT_TRUE(check_classical_convolution(u, p, j).passed);
    EXPECT_EQ(kind_of([&] { check_classical_convolution(u, p, {0, 0, 1}); }), ErrorKind::InvalidArgument);
}

TEST(two_particle, reference_values) {
    const IdentityReport hom = check_two_particle(kBeamsplitter, {0, 1}, {0, 1});
    EXPECT_LE(hom.residual, 1e-15);
    EXPECT_TRUE(hom.passed);
    const IdentityReport f = check_two_particle(kFourier3, {0, 1}, {0, 1});
    EXPECT_LE(f.residual, 1e-12);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const UnitaryMatrix u = haar_random_unitary(5, seed);
        for (std::size_t a = 0; a < 5; ++a) {
            for (std::size_t b = a + 1; b < 5; ++b) {
                const IdentityReport r = check_two_particle(u, {a, b}, {(a + 1) % 5, (b + 1) % 5});
                EXPECT_LE(r.residual, 1e-12);
                ASSERT_EQ(r.sub_residuals.size(), 1u);
                EXPECT_LE(r.sub_residuals[0].residual, 1e-12);
            }
        }
    }
    EXPECT_EQ(kind_of([] { check_two_particle(kFourier3, {0, 0}, {0, 1}); }), ErrorKind::UnsupportedPattern);
    EXPECT_EQ(kind_of([] { check_two_particle(kFourier3, {0, 3}, {0, 1}); }), ErrorKind::IndexOutOfRange);
}

// Raw residual is the bunching excess minus the antibunching excess.
TEST(two_particle, raw_residual_is_excess_difference) {
    const UnitaryMatrix u = haar_random_unitary(4, 12);
    const PatternPair p{{1, 0, 1, 0}, {0, 1, 1, 0}};
    const double b = oracle::boson(u.matrix(), p.input, p.output);
    const double f = oracle::fermion(u.matrix(), p.input, p.output);
    const double c = oracle::classical(u.matrix(), p.input, p.output);
    EXPECT_NEAR(check_two_particle(u, {0, 2}, {1, 2}).raw_residual, (c - b) - (f - c), 1e-14);
}

TEST(three_particle, fourier_and_permutation) {
    const IdentityReport f = check_three_particle(kFourier3, {0, 1, 2}, {0, 1, 2});
    EXPECT_TRUE(f.passed);
    EXPECT_LE(f.residual, 1e-12);
    EXPECT_NEAR(oracle::boson(kFourier3.matrix(), {1, 1, 1}, {1, 1, 1}) -
                    oracle::fermion(kFourier3.matrix(), {1, 1, 1}, {1, 1, 1}),
                -2.0 / 3.0, 1e-12);
    const IdentityReport p = check_three_particle(permutation_unitary({1, 2, 0, 3}), {0, 1, 2}, {0, 1, 2});
    EXPECT_EQ(p.residual, 0.0);
    for (const SubResidual &s : p.sub_residuals) EXPECT_EQ(s.residual, 0.0) << s.name;
    const IdentityReport h = check_three_particle(haar_random_unitary(4, 8), {0, 1, 2}, {1, 2, 3});
    EXPECT_TRUE(h.passed);
    EXPECT_EQ(h.sub_residuals.size(), 4u);
}

TEST(sum_difference_system, values) {
    const UnitaryMatrix u = haar_random_unitary(4, 14);
    const auto reports = check_sum_difference_system(u, 4);
    for (const IdentityReport &r : reports) {
        EXPECT_TRUE(r.passed) << r.relation;
        EXPECT_LE(r.residual, 1e-10) << r.relation;
        expect_consistent(r);
    }
    EXPECT_EQ(reports.front().relation, "D1");
    EXPECT_EQ(reports.front().raw_residual, 0.0);

    const auto bs = check_sum_difference_system(kBeamsplitter, 2);
    for (const IdentityReport &r : bs) {
        if (r.relation == "D12-explicit") EXPECT_LE(r.residual, 1e-15);
    }
    // D for the beamsplitter's two-particle pattern: 0 - 1.
    const double b = oracle::boson(kBeamsplitter.matrix(), {1, 1}, {1, 1});
    const double f = oracle::fermion(kBeamsplitter.matrix(), {1, 1}, {1, 1});
    EXPECT_NEAR(b - f, -1.0, 1e-15);
    EXPECT_EQ(kind_of([&] { check_sum_difference_system(kBeamsplitter, 3); }), ErrorKind::DimensionTooSmall);
}

TEST(single_mode_bunching, values) {
    const UnitaryMatrix u = haar_random_unitary(3, 77);
    for (std::size_t m = 0; m < 3; ++m) {
        EXPECT_EQ(check_single_mode_bunching(u, 1, m).residual, 0.0);
        EXPECT_LE(check_single_mode_bunching(u, 3, m).residual, 1e-10);
    }
    EXPECT_NEAR(oracle::boson(kBeamsplitter.matrix(), {2, 0}, {2, 0}), 0.25, 1e-15);
    const IdentityReport r = check_single_mode_bunching(kBeamsplitter, 2, 0);
    EXPECT_TRUE(r.passed);
    ASSERT_EQ(r.sub_residuals.size(), 1u);
    EXPECT_EQ(r.sub_residuals[0].name, "multinomial");
    EXPECT_LE(r.sub_residuals[0].residual, 1e-15);
}

TEST(naturalness, labels) {
    EXPECT_EQ(classify_transition(kBeamsplitter, {{1, 1}, {1, 1}}).label, Naturalness::Natural);
    EXPECT_NEAR(classify_transition(kBeamsplitter, {{1, 1}, {1, 1}}).difference, -1.0, 1e-12);
    EXPECT_EQ(classify_transition(kFourier3, {{1, 1, 0}, {1, 1, 0}}).label, Naturalness::Natural);
    EXPECT_EQ(classify_transition(permutation_unitary({1, 0, 2}), {{1, 0, 1}, {0, 1, 1}}).label, Naturalness::Boundary);
    EXPECT_EQ(classify_ordering(0.4, 0.3, 0.2), Naturalness::Antinatural);
    EXPECT_EQ(classify_ordering(0.3, 0.3, 0.4), Naturalness::Boundary);
    EXPECT_EQ(kind_of([] { classify_transition(kFourier3, {{2, 0, 0}, {1, 1, 0}}); }), ErrorKind::UnsupportedPattern);
    EXPECT_TRUE(is_two_particle_binary({{1, 1, 0}, {0, 1, 1}}));
    EXPECT_FALSE(is_two_particle_binary({{1, 1, 1}, {0, 1, 1}}));
}

TEST(all_pattern_pairs, ordering) {
    const auto pairs = all_pattern_pairs(2, 2);
    ASSERT_EQ(pairs.size(), 1u + 4u + 9u);
    EXPECT_EQ(pairs[0].input, Occupation({0, 0}));
    EXPECT_EQ(pairs[1].input, Occupation({1, 0}));
    EXPECT_EQ(pairs[1].output, Occupation({1, 0}));
    EXPECT_EQ(pairs[2].output, Occupation({0, 1}));
    EXPECT_EQ(pairs.back().input, Occupation({0, 2}));
}

TEST(parallel_map_with_cache, order_and_errors) {
    const ComplexMatrix a = haar_random_unitary(3, 2).matrix();
    const auto out = parallel_map_with_cache(a, 50, 4, [](PatternCache &, std::size_t k) { return k * k; });
    for (std::size_t k = 0; k < out.size(); ++k) EXPECT_EQ(out[k], k * k);
    EXPECT_EQ(kind_of([&] {
                  parallel_map_with_cache(a, 10, 4, [](PatternCache &, std::size_t k) -> int {
                      if (k == 7) throw Error(ErrorKind::Overflow, "boom");
                      return 0;
                  });
              }),
              ErrorKind::Overflow);
}
