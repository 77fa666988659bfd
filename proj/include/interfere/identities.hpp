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

#ifndef INTERFERE_IDENTITIES_HPP
#define INTERFERE_IDENTITIES_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "interfere/matrix.hpp"
#include "interfere/transition.hpp"

namespace interfere {

inline constexpr double kDefaultIdentityTolerance = 1e-10;
inline constexpr double kDefaultTieEpsilon = 1e-10;

struct SubResidual {
    std::string name;
    double residual;
};

/// Outcome of one identity evaluation. residual = |raw_residual| / normalizer
/// with normalizer = sum of |terms| + 1.
struct IdentityReport {
    std::string identity;
    /// Distinguishes the relations of a multi-relation check (sum-difference).
    std::string relation;
    std::size_t modes = 0;
    std::optional<PatternPair> pattern;
    double residual = 0.0;
    double raw_residual = 0.0;
    std::size_t term_count = 0;
    double normalizer = 1.0;
    /// Companion relations checked alongside the main one; each must also
    /// stay within tolerance for the report to pass.
    std::vector<SubResidual> sub_residuals;
    bool passed = false;
};

struct CheckOptions {
    double tolerance = kDefaultIdentityTolerance;
    Budget budget;
};

/// Accumulates signed terms of an identity that should sum to zero.
class TermLedger {
public:
    void add(double term);
    double raw() const;
    double normalizer() const;
    double residual() const { return std::abs(raw()) / normalizer(); }
    std::size_t count() const noexcept { return count_; }

private:
    double sum_ = 0.0, comp_ = 0.0;
    double abs_sum_ = 0.0, abs_comp_ = 0.0;
    std::size_t count_ = 0;
};

// Recurrence: sum_m (-1)^m sum_{alpha,beta} |[U]_{beta,alpha}|^2 B_{n-1_beta}^{(i-1_alpha)} = 0.
IdentityReport check_lemma2(PatternCache &cache, const PatternPair &pattern, const CheckOptions &options = {});
IdentityReport check_lemma2(const UnitaryMatrix &u, const PatternPair &pattern, const CheckOptions &options = {});

enum class ConvolutionOrder {
    /// sum (-1)^|j| F_k^(j) B_{n-k}^(i-j)
    FermionFirst,
    /// sum (-1)^|j| B_k^(j) F_{n-k}^(i-j): the same identity with the roles exchanged.
    BosonFirst,
};

/// Boson-fermion complementarity: the signed convolution of fermionic and
/// bosonic probabilities vanishes for every pattern other than the vacuum,
/// where B = F = 1 is checked instead.
IdentityReport check_theorem1(PatternCache &cache, const PatternPair &pattern, const CheckOptions &options = {},
                              ConvolutionOrder order = ConvolutionOrder::FermionFirst);
IdentityReport check_theorem1(const UnitaryMatrix &u, const PatternPair &pattern, const CheckOptions &options = {},
                              ConvolutionOrder order = ConvolutionOrder::FermionFirst);

/// The same convolution written with |det|^2 and |per|^2 of submatrices of an
/// arbitrary square matrix.
IdentityReport check_theorem2(PatternCache &cache, const PatternPair &pattern, const CheckOptions &options = {});
IdentityReport check_theorem2(const ComplexMatrix &a, const PatternPair &pattern, const CheckOptions &options = {});

/// The matrix identity routed through a unitary dilation: check_theorem1 on
/// V with the pattern zero-padded to V's size.
struct Theorem2CrossCheck {
    IdentityReport direct;
    IdentityReport dilated;
    double epsilon = 0.0;
    std::size_t dilation_size = 0;
    /// Both routes passed or both failed.
    bool consistent = false;
};
Theorem2CrossCheck cross_check_theorem2(const ComplexMatrix &a, const PatternPair &pattern,
                                        const CheckOptions &options = {});

/// sum_m (-1)^m sum_{alpha,beta in R_m} |[A]_{alpha,beta}|^2 |{A}_{alpha^c,beta^c}|^2 = 0. N <= 8.
IdentityReport check_corollary1(const ComplexMatrix &a, const CheckOptions &options = {});

/// sum_m (-1)^m sum_{alpha in R_m} [A]_alpha {A}_{alpha^c} = 0 over principal minors. N <= 10.
IdentityReport check_muir(const ComplexMatrix &a, const CheckOptions &options = {});

/// C_n^(i) = sum_k C_k^(j) C_{n-k}^(i-j) for a split j <= i of the input.
IdentityReport check_classical_convolution(PatternCache &cache, const PatternPair &pattern, const Occupation &split,
                                           const CheckOptions &options = {});
IdentityReport check_classical_convolution(const UnitaryMatrix &u, const PatternPair &pattern,
                                           const Occupation &split, const CheckOptions &options = {});

/// One particle in each of two input and two output modes (0-based):
/// raw residual (C - B) - (F - C), with the explicit squared-modulus form
/// of 2C as a sub-residual.
IdentityReport check_two_particle(PatternCache &cache, std::pair<std::size_t, std::size_t> in_modes,
                                  std::pair<std::size_t, std::size_t> out_modes, const CheckOptions &options = {});
IdentityReport check_two_particle(const UnitaryMatrix &u, std::pair<std::size_t, std::size_t> in_modes,
                                  std::pair<std::size_t, std::size_t> out_modes, const CheckOptions &options = {});

/// Three particles, one per listed mode. Main relation is the expanded
/// complementarity sum; sub-residuals cover the B - F form and the Laplace
/// expansion of C for each output column.
IdentityReport check_three_particle(PatternCache &cache, std::array<std::size_t, 3> in_modes,
                                    std::array<std::size_t, 3> out_modes, const CheckOptions &options = {});
IdentityReport check_three_particle(const UnitaryMatrix &u, std::array<std::size_t, 3> in_modes,
                                    std::array<std::size_t, 3> out_modes, const CheckOptions &options = {});

/// S = B + F and D = B - F relations on the leading modes for 1..upto
/// particles, plus the explicit one- and two-particle forms.
std::vector<IdentityReport> check_sum_difference_system(const UnitaryMatrix &u, int upto,
                                                        const CheckOptions &options = {});

/// B of n particles in `mode` to n particles in `mode` equals |U_mm|^(2n);
/// for n = 2 also the multinomial split into `mode` and the next mode.
IdentityReport check_single_mode_bunching(const UnitaryMatrix &u, int n, std::size_t mode,
                                          const CheckOptions &options = {});

enum class Naturalness { Natural, Antinatural, Boundary };
std::string_view to_string(Naturalness label);

struct NaturalnessLabel {
    Naturalness label;
    /// B - F for the pattern.
    double difference;
};

/// Ordering of (B, C, F) with ties within tie_eps reported as Boundary.
Naturalness classify_ordering(double boson, double classical, double fermion, double tie_eps = kDefaultTieEpsilon);

/// Two particles, at most one per mode on both sides; UnsupportedPattern otherwise.
NaturalnessLabel classify_transition(const UnitaryMatrix &u, const PatternPair &pattern,
                                     double tie_eps = kDefaultTieEpsilon);

/// True when the pattern is two particles with at most one per mode on both sides.
bool is_two_particle_binary(const PatternPair &pattern);

/// All (i, n) with |i| = |n| <= max_particles, ordered by particle number,
/// then input, then output (enumerate_occupations order).
std::vector<PatternPair> all_pattern_pairs(std::size_t modes, int max_particles);

}  // namespace interfere

#endif
