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

#include <algorithm>
#include <cmath>
#include <string>

#include "interfere/combinat.hpp"
#include "interfere/error.hpp"
#include "interfere/numeric.hpp"
#include "interfere/permdet.hpp"

namespace interfere {

namespace {

using ModePair = std::pair<std::size_t, std::size_t>;

constexpr std::size_t kMinorPairCap = 8;
constexpr std::size_t kMuirCap = 10;

void neumaier(double &sum, double &comp, double x) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
}

IdentityReport finish(std::string name, std::size_t modes, std::optional<PatternPair> pattern,
                      const TermLedger &ledger, const CheckOptions &options) {
    IdentityReport report;
    report.identity = std::move(name);
    report.modes = modes;
    report.pattern = std::move(pattern);
    report.raw_residual = ledger.raw();
    report.normalizer = ledger.normalizer();
    report.residual = ledger.residual();
    report.term_count = ledger.count();
    report.passed = report.residual <= options.tolerance;
    return report;
}

void add_sub(IdentityReport &report, std::string name, const TermLedger &ledger, const CheckOptions &options) {
    const double r = ledger.residual();
    report.sub_residuals.push_back({std::move(name), r});
    report.passed = report.passed && r <= options.tolerance;
}

void require_pattern(const PatternCache &cache, const PatternPair &pattern, const CheckOptions &options) {
    if (pattern.input.size() != cache.modes() || pattern.output.size() != cache.modes()) {
        throw Error(ErrorKind::DimensionMismatch, "pattern length does not match the matrix");
    }
    require_within(options.budget, pattern);
}

Occupation indicator(std::size_t modes, std::initializer_list<std::size_t> occupied) {
    return Occupation::from_modes(modes, std::vector<std::size_t>(occupied));
}

void require_modes(std::size_t modes, std::initializer_list<std::size_t> indices) {
    for (std::size_t m : indices) {
        if (m >= modes) throw Error(ErrorKind::IndexOutOfRange, "mode index beyond the interferometer size");
    }
}

// Signed convolution shared by the unitary and arbitrary-matrix forms.
TermLedger signed_convolution(PatternCache &cache, const PatternPair &pattern, ConvolutionOrder order) {
    const Occupation &in = pattern.input;
    const Occupation &out = pattern.output;
    TermLedger ledger;
    const std::vector<Occupation> in_parts = bounded_subvectors(in);
    const std::vector<Occupation> out_parts = bounded_subvectors(out);
    for (const Occupation &j : in_parts) {
        for (const Occupation &k : out_parts) {
            if (j.total() != k.total()) continue;
            const double sign = (j.total() % 2 == 0) ? 1.0 : -1.0;
            if (order == ConvolutionOrder::FermionFirst) {
                ledger.add(sign * cache.fermion(j, k) * cache.boson(in.minus(j), out.minus(k)));
            } else {
                // Binary parts now label the fermionic remainder.
                const Occupation bj = in.minus(j);
                const Occupation bk = out.minus(k);
                const double swapped_sign = (bj.total() % 2 == 0) ? 1.0 : -1.0;
                ledger.add(swapped_sign * cache.boson(bj, bk) * cache.fermion(j, k));
            }
        }
    }
    return ledger;
}

TermLedger vacuum_ledger(PatternCache &cache, const PatternPair &pattern) {
    TermLedger ledger;
    ledger.add(cache.boson(pattern.input, pattern.output) - 1.0);
    ledger.add(cache.fermion(pattern.input, pattern.output) - 1.0);
    return ledger;
}

std::size_t other_index(std::size_t a, std::size_t b) { return 3 - a - b; }

}  // namespace

void TermLedger::add(double term) {
    neumaier(sum_, comp_, term);
    neumaier(abs_sum_, abs_comp_, std::abs(term));
    ++count_;
}

double TermLedger::raw() const { return sum_ + comp_; }
double TermLedger::normalizer() const { return abs_sum_ + abs_comp_ + 1.0; }

IdentityReport check_lemma2(PatternCache &cache, const PatternPair &pattern, const CheckOptions &options) {
    require_pattern(cache, pattern, options);
    const std::size_t n = cache.modes();
    TermLedger ledger;
    if (pattern.input.total() == 0 && pattern.output.total() == 0) {
        ledger.add(cache.boson(pattern.input, pattern.output) - 1.0);
        return finish("lemma2", n, pattern, ledger, options);
    }
    for (std::size_t m = 0; m <= n; ++m) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        const std::vector<Subset> alphas = enumerate_subsets_within(pattern.input, m);
        const std::vector<Subset> betas = enumerate_subsets_within(pattern.output, m);
        for (const Subset &alpha : alphas) {
            const Occupation one_alpha = Occupation::from_modes(n, alpha.indices);
            const Occupation rest_in = *subtract_indicator(pattern.input, alpha);
            for (const Subset &beta : betas) {
                const Occupation one_beta = Occupation::from_modes(n, beta.indices);
                const Occupation rest_out = *subtract_indicator(pattern.output, beta);
                // |[U]_{beta,alpha}|^2 is the fermionic probability 1_alpha -> 1_beta.
                ledger.add(sign * cache.fermion(one_alpha, one_beta) * cache.boson(rest_in, rest_out));
            }
        }
    }
    return finish("lemma2", n, pattern, ledger, options);
}

IdentityReport check_lemma2(const UnitaryMatrix &u, const PatternPair &pattern, const CheckOptions &options) {
    PatternCache cache(u.matrix());
    return check_lemma2(cache, pattern, options);
}

IdentityReport check_theorem1(PatternCache &cache, const PatternPair &pattern, const CheckOptions &options,
                              ConvolutionOrder order) {
    require_pattern(cache, pattern, options);
    const bool vacuum = pattern.input.total() == 0 && pattern.output.total() == 0;
    const TermLedger ledger = vacuum ? vacuum_ledger(cache, pattern) : signed_convolution(cache, pattern, order);
    return finish("theorem1", cache.modes(), pattern, ledger, options);
}

IdentityReport check_theorem1(const UnitaryMatrix &u, const PatternPair &pattern, const CheckOptions &options,
                              ConvolutionOrder order) {
    PatternCache cache(u.matrix());
    return check_theorem1(cache, pattern, options, order);
}

IdentityReport check_theorem2(PatternCache &cache, const PatternPair &pattern, const CheckOptions &options) {
    require_pattern(cache, pattern, options);
    const bool vacuum = pattern.input.total() == 0 && pattern.output.total() == 0;
    const TermLedger ledger =
        vacuum ? vacuum_ledger(cache, pattern) : signed_convolution(cache, pattern, ConvolutionOrder::FermionFirst);
    return finish("theorem2", cache.modes(), pattern, ledger, options);
}

IdentityReport check_theorem2(const ComplexMatrix &a, const PatternPair &pattern, const CheckOptions &options) {
    if (a.rows() != a.cols()) throw Error(ErrorKind::NotSquare, "matrix identity needs a square matrix");
    PatternCache cache(a);
    return check_theorem2(cache, pattern, options);
}

Theorem2CrossCheck cross_check_theorem2(const ComplexMatrix &a, const PatternPair &pattern,
                                        const CheckOptions &options) {
    Theorem2CrossCheck out;
    out.direct = check_theorem2(a, pattern, options);
    const Dilation dilation = unitary_dilation(a);
    out.epsilon = dilation.epsilon;
    out.dilation_size = dilation.unitary.size();
    const PatternPair padded{pattern.input.padded(out.dilation_size), pattern.output.padded(out.dilation_size)};
    PatternCache cache(dilation.unitary.matrix());
    const bool vacuum = pattern.input.total() == 0 && pattern.output.total() == 0;
    const TermLedger ledger =
        vacuum ? vacuum_ledger(cache, padded) : signed_convolution(cache, padded, ConvolutionOrder::FermionFirst);
    out.dilated = finish("theorem2-dilated", out.dilation_size, padded, ledger, options);
    out.consistent = out.direct.passed == out.dilated.passed;
    return out;
}

IdentityReport check_corollary1(const ComplexMatrix &a, const CheckOptions &options) {
    if (a.rows() != a.cols()) throw Error(ErrorKind::NotSquare, "matrix identity needs a square matrix");
    const auto n = static_cast<std::size_t>(a.rows());
    if (n > kMinorPairCap) {
        throw Error(ErrorKind::SizeLimit, "all-minors identity is capped at N = 8", static_cast<double>(n));
    }
    TermLedger ledger;
    for (std::size_t m = 0; m <= n; ++m) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        const std::vector<Subset> subsets = enumerate_subsets(n, m);
        for (const Subset &alpha : subsets) {
            const Subset alpha_c = alpha.complement(n);
            for (const Subset &beta : subsets) {
                const Subset beta_c = beta.complement(n);
                const double det = std::norm(determinant(minor_keep(a, alpha, beta)).value);
                const double per = std::norm(permanent(minor_keep(a, alpha_c, beta_c)).value);
                ledger.add(sign * det * per);
            }
        }
    }
    return finish("corollary1", n, std::nullopt, ledger, options);
}

IdentityReport check_muir(const ComplexMatrix &a, const CheckOptions &options) {
    if (a.rows() != a.cols()) throw Error(ErrorKind::NotSquare, "matrix identity needs a square matrix");
    const auto n = static_cast<std::size_t>(a.rows());
    if (n > kMuirCap) {
        throw Error(ErrorKind::SizeLimit, "principal-minor identity is capped at N = 10", static_cast<double>(n));
    }
    CompensatedSum<Complex> sum;
    CompensatedSum<double> magnitude;
    std::size_t count = 0;
    for (std::size_t m = 0; m <= n; ++m) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        for (const Subset &alpha : enumerate_subsets(n, m)) {
            const Subset alpha_c = alpha.complement(n);
            const Complex term = sign * determinant(minor_keep(a, alpha, alpha)).value *
                                 permanent(minor_keep(a, alpha_c, alpha_c)).value;
            sum.add(term);
            magnitude.add(std::abs(term));
            ++count;
        }
    }
    IdentityReport report;
    report.identity = "muir";
    report.modes = n;
    report.raw_residual = std::abs(sum.value());
    report.normalizer = magnitude.value() + 1.0;
    report.residual = report.raw_residual / report.normalizer;
    report.term_count = count;
    report.passed = report.residual <= options.tolerance;
    return report;
}

IdentityReport check_classical_convolution(PatternCache &cache, const PatternPair &pattern, const Occupation &split,
                                           const CheckOptions &options) {
    require_pattern(cache, pattern, options);
    if (!split.dominated_by(pattern.input)) {
        throw Error(ErrorKind::InvalidArgument, "split must satisfy j <= i componentwise");
    }
    const Occupation rest = pattern.input.minus(split);
    TermLedger ledger;
    ledger.add(cache.classical(pattern.input, pattern.output));
    for (const Occupation &k : dominated_vectors(pattern.output)) {
        if (k.total() != split.total()) continue;
        ledger.add(-cache.classical(split, k) * cache.classical(rest, pattern.output.minus(k)));
    }
    return finish("classical-convolution", cache.modes(), pattern, ledger, options);
}

IdentityReport check_classical_convolution(const UnitaryMatrix &u, const PatternPair &pattern,
                                           const Occupation &split, const CheckOptions &options) {
    PatternCache cache(u.matrix());
    return check_classical_convolution(cache, pattern, split, options);
}

IdentityReport check_two_particle(PatternCache &cache, ModePair in_modes, ModePair out_modes,
                                  const CheckOptions &options) {
    const std::size_t n = cache.modes();
    require_modes(n, {in_modes.first, in_modes.second, out_modes.first, out_modes.second});
    if (in_modes.first == in_modes.second || out_modes.first == out_modes.second) {
        throw Error(ErrorKind::UnsupportedPattern, "two-particle check needs one particle per chosen mode");
    }
    const PatternPair pattern{indicator(n, {in_modes.first, in_modes.second}),
                              indicator(n, {out_modes.first, out_modes.second})};
    require_within(options.budget, pattern);
    const double b = cache.boson(pattern.input, pattern.output);
    const double f = cache.fermion(pattern.input, pattern.output);
    const double c = cache.classical(pattern.input, pattern.output);

    // Bunching excess (C - B) against antibunching excess (F - C).
    TermLedger main;
    main.add(c);
    main.add(-b);
    main.add(-f);
    main.add(c);
    IdentityReport report = finish("two-particle", n, pattern, main, options);

    const ComplexMatrix &a = cache.matrix();
    auto m = [&](std::size_t out, std::size_t in) {
        return std::norm(a(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in)));
    };
    const auto [i, j] = in_modes;
    const auto [k, l] = out_modes;
    TermLedger explicit_form;
    explicit_form.add(2.0 * m(k, i) * m(l, j));
    explicit_form.add(2.0 * m(k, j) * m(l, i));
    explicit_form.add(-2.0 * c);
    add_sub(report, "explicit", explicit_form, options);
    return report;
}

IdentityReport check_two_particle(const UnitaryMatrix &u, ModePair in_modes, ModePair out_modes,
                                  const CheckOptions &options) {
    PatternCache cache(u.matrix());
    return check_two_particle(cache, in_modes, out_modes, options);
}

IdentityReport check_three_particle(PatternCache &cache, std::array<std::size_t, 3> in_modes,
                                    std::array<std::size_t, 3> out_modes, const CheckOptions &options) {
    const std::size_t n = cache.modes();
    if (n < 3) throw Error(ErrorKind::DimensionTooSmall, "three-particle relations need N >= 3");
    require_modes(n, {in_modes[0], in_modes[1], in_modes[2], out_modes[0], out_modes[1], out_modes[2]});
    auto distinct = [](const std::array<std::size_t, 3> &m) { return m[0] != m[1] && m[0] != m[2] && m[1] != m[2]; };
    if (!distinct(in_modes) || !distinct(out_modes)) {
        throw Error(ErrorKind::UnsupportedPattern, "three-particle check needs three distinct modes per side");
    }
    const PatternPair full{indicator(n, {in_modes[0], in_modes[1], in_modes[2]}),
                           indicator(n, {out_modes[0], out_modes[1], out_modes[2]})};
    require_within(options.budget, full);

    auto single = [&](std::size_t i, std::size_t j) {
        return PatternPair{indicator(n, {in_modes[i]}), indicator(n, {out_modes[j]})};
    };
    // Pattern with the i-th input and j-th output mode removed.
    auto pair_without = [&](std::size_t i, std::size_t j) {
        const std::size_t i1 = i == 0 ? 1 : 0, i2 = other_index(i, i1);
        const std::size_t j1 = j == 0 ? 1 : 0, j2 = other_index(j, j1);
        return PatternPair{indicator(n, {in_modes[i1], in_modes[i2]}), indicator(n, {out_modes[j1], out_modes[j2]})};
    };

    const double b3 = cache.boson(full.input, full.output);
    const double f3 = cache.fermion(full.input, full.output);
    const double c3 = cache.classical(full.input, full.output);

    TermLedger expanded;
    TermLedger difference;
    expanded.add(b3);
    expanded.add(-f3);
    difference.add(b3);
    difference.add(-f3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const PatternPair one = single(i, j);
            const PatternPair two = pair_without(i, j);
            const double b2 = cache.boson(two.input, two.output);
            const double f2 = cache.fermion(two.input, two.output);
            expanded.add(-b2 * cache.fermion(one.input, one.output));
            expanded.add(cache.boson(one.input, one.output) * f2);
            const double c1 = cache.classical(one.input, one.output);
            difference.add(-c1 * b2);
            difference.add(c1 * f2);
        }
    }
    IdentityReport report = finish("three-particle", n, full, expanded, options);
    add_sub(report, "difference", difference, options);
    for (std::size_t j = 0; j < 3; ++j) {
        TermLedger laplace;
        laplace.add(c3);
        for (std::size_t i = 0; i < 3; ++i) {
            const PatternPair one = single(i, j);
            const PatternPair two = pair_without(i, j);
            laplace.add(-cache.classical(one.input, one.output) * cache.classical(two.input, two.output));
        }
        add_sub(report, "laplace-" + std::to_string(j + 1), laplace, options);
    }
    return report;
}

IdentityReport check_three_particle(const UnitaryMatrix &u, std::array<std::size_t, 3> in_modes,
                                    std::array<std::size_t, 3> out_modes, const CheckOptions &options) {
    PatternCache cache(u.matrix());
    return check_three_particle(cache, in_modes, out_modes, options);
}

std::vector<IdentityReport> check_sum_difference_system(const UnitaryMatrix &u, int upto,
                                                        const CheckOptions &options) {
    if (upto < 1 || upto > 4) throw Error(ErrorKind::InvalidArgument, "sum/difference system covers 1..4 particles");
    const std::size_t n = u.size();
    if (n < static_cast<std::size_t>(upto)) {
        throw Error(ErrorKind::DimensionTooSmall,
                    std::to_string(upto) + "-particle relations need at least " + std::to_string(upto) + " modes");
    }
    PatternCache cache(u.matrix());

    // One particle in each listed (0-based) mode of the leading block.
    auto modes_pattern = [n](const std::vector<std::size_t> &in, const std::vector<std::size_t> &out) {
        return PatternPair{Occupation::from_modes(n, in), Occupation::from_modes(n, out)};
    };
    auto leading = [](std::size_t count) {
        std::vector<std::size_t> m(count);
        for (std::size_t k = 0; k < count; ++k) m[k] = k;
        return m;
    };
    auto without = [](std::vector<std::size_t> modes, const std::vector<std::size_t> &drop) {
        std::erase_if(modes, [&](std::size_t m) { return std::find(drop.begin(), drop.end(), m) != drop.end(); });
        return modes;
    };
    auto B = [&](const PatternPair &p) { return cache.boson(p.input, p.output); };
    auto F = [&](const PatternPair &p) { return cache.fermion(p.input, p.output); };
    auto C = [&](const PatternPair &p) { return cache.classical(p.input, p.output); };

    std::vector<IdentityReport> reports;
    auto emit = [&](const char *relation, const PatternPair &p, const TermLedger &ledger) {
        IdentityReport r = finish("sum-difference", n, p, ledger, options);
        r.relation = relation;
        reports.push_back(std::move(r));
        return reports.size() - 1;
    };

    const PatternPair p1 = modes_pattern({0}, {0});
    {
        TermLedger d1;
        d1.add(B(p1));
        d1.add(-F(p1));
        emit("D1", p1, d1);
        TermLedger s1;
        s1.add(B(p1));
        s1.add(F(p1));
        s1.add(-2.0 * std::norm(u(0, 0)));
        const std::size_t idx = emit("S1-explicit", p1, s1);
        TermLedger s1c;
        s1c.add(B(p1) + F(p1));
        s1c.add(-2.0 * C(p1));
        add_sub(reports[idx], "classical", s1c, options);
    }
    if (upto >= 2) {
        const auto all = leading(2);
        const PatternPair p2 = modes_pattern(all, all);
        TermLedger s2;
        s2.add(B(p2));
        s2.add(F(p2));
        for (std::size_t i : all) {
            for (std::size_t j : all) {
                s2.add(-C(modes_pattern({i}, {j})) * C(modes_pattern(without(all, {i}), without(all, {j}))));
            }
        }
        const std::size_t idx = emit("S12", p2, s2);
        TermLedger s2c;
        s2c.add(B(p2));
        s2c.add(F(p2));
        s2c.add(-2.0 * C(p2));
        add_sub(reports[idx], "twice-classical", s2c, options);

        TermLedger d2;
        d2.add(B(p2));
        d2.add(-F(p2));
        d2.add(-4.0 * std::real(u(0, 0) * u(1, 1) * std::conj(u(0, 1)) * std::conj(u(1, 0))));
        emit("D12-explicit", p2, d2);
    }
    if (upto >= 3) {
        const auto all = leading(3);
        const PatternPair p3 = modes_pattern(all, all);
        TermLedger d3;
        d3.add(B(p3));
        d3.add(-F(p3));
        for (std::size_t i : all) {
            for (std::size_t j : all) {
                const double c1 = C(modes_pattern({i}, {j}));
                const PatternPair rest = modes_pattern(without(all, {i}), without(all, {j}));
                d3.add(-c1 * B(rest));
                d3.add(c1 * F(rest));
            }
        }
        emit("D123", p3, d3);
    }
    if (upto >= 4) {
        const auto all = leading(4);
        const PatternPair p4 = modes_pattern(all, all);
        TermLedger s4;
        s4.add(B(p4));
        s4.add(F(p4));
        for (std::size_t i : all) {
            for (std::size_t j : all) {
                const double c1 = C(modes_pattern({i}, {j}));
                const PatternPair rest = modes_pattern(without(all, {i}), without(all, {j}));
                s4.add(-c1 * B(rest));
                s4.add(-c1 * F(rest));
            }
        }
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i + 1; j < 4; ++j) {
                for (std::size_t k = 0; k < 4; ++k) {
                    for (std::size_t l = k + 1; l < 4; ++l) {
                        const PatternPair pair = modes_pattern({i, j}, {k, l});
                        const PatternPair rest = modes_pattern(without(all, {i, j}), without(all, {k, l}));
                        s4.add(B(rest) * F(pair));
                    }
                }
            }
        }
        emit("S1234", p4, s4);
    }
    return reports;
}

IdentityReport check_single_mode_bunching(const UnitaryMatrix &u, int n, std::size_t mode,
                                          const CheckOptions &options) {
    const std::size_t modes = u.size();
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "particle number must be positive");
    require_modes(modes, {mode});
    std::vector<int> counts(modes, 0);
    counts[mode] = n;
    const PatternPair pattern{Occupation(counts), Occupation(counts)};
    require_within(options.budget, pattern);
    PatternCache cache(u.matrix());

    const double c1 = std::norm(u(mode, mode));
    TermLedger ledger;
    ledger.add(cache.boson(pattern.input, pattern.output));
    ledger.add(-std::pow(c1, n));
    IdentityReport report = finish("single-mode-bunching", modes, pattern, ledger, options);

    if (n == 2 && modes >= 2) {
        const std::size_t next = (mode + 1) % modes;
        std::vector<int> split(modes, 0);
        split[mode] = 1;
        split[next] = 1;
        const Occupation input(counts);
        const Occupation output(split);
        TermLedger multinomial;
        multinomial.add(cache.boson(input, output));
        multinomial.add(-2.0 * c1 * std::norm(u(next, mode)));
        add_sub(report, "multinomial", multinomial, options);
    }
    return report;
}

std::string_view to_string(Naturalness label) {
    switch (label) {
        case Naturalness::Natural: return "Natural";
        case Naturalness::Antinatural: return "Antinatural";
        case Naturalness::Boundary: return "Boundary";
    }
    return "Unknown";
}

Naturalness classify_ordering(double boson, double classical, double fermion, double tie_eps) {
    if (boson < classical - tie_eps && classical < fermion - tie_eps) return Naturalness::Natural;
    if (boson > classical + tie_eps && classical > fermion + tie_eps) return Naturalness::Antinatural;
    return Naturalness::Boundary;
}

bool is_two_particle_binary(const PatternPair &pattern) {
    return pattern.input.total() == 2 && pattern.output.total() == 2 && pattern.input.is_binary() &&
           pattern.output.is_binary();
}

NaturalnessLabel classify_transition(const UnitaryMatrix &u, const PatternPair &pattern, double tie_eps) {
    if (!is_two_particle_binary(pattern)) {
        throw Error(ErrorKind::UnsupportedPattern, "naturalness is defined for two particles, one per mode");
    }
    const TransitionTriple t = transition_triple(u, pattern);
    return {classify_ordering(t.boson, t.classical, t.fermion, tie_eps), t.boson - t.fermion};
}

std::vector<PatternPair> all_pattern_pairs(std::size_t modes, int max_particles) {
    std::vector<PatternPair> out;
    for (int t = 0; t <= max_particles; ++t) {
        const std::vector<Occupation> patterns = enumerate_occupations(modes, t);
        for (const Occupation &in : patterns) {
            for (const Occupation &o : patterns) out.push_back({in, o});
        }
    }
    return out;
}

}  // namespace interfere
