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

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "interfere/error.hpp"
#include "interfere/numeric.hpp"
#include "permdet_internal.hpp"

namespace interfere {

namespace {

using Index = Eigen::Index;

// Below this size the subset loop is too short to amortize a parallel region.
constexpr std::size_t kParallelThreshold = 12;
// Fixed chunk count keeps the summation partition independent of threads.
constexpr std::uint64_t kChunks = 256;

constexpr std::size_t kMaxBinomial = 64;

const std::array<std::array<double, kMaxBinomial + 1>, kMaxBinomial + 1> &binomial_table() {
    static const auto table = [] {
        std::array<std::array<double, kMaxBinomial + 1>, kMaxBinomial + 1> t{};
        for (std::size_t n = 0; n <= kMaxBinomial; ++n) {
            t[n][0] = 1.0;
            for (std::size_t k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0.0);
        }
        return t;
    }();
    return table;
}

}  // namespace

MatrixFunctionValue permanent(const ComplexMatrix &a, std::size_t max_size) {
    if (auto v = detail::shape_convention(a)) return *v;
    const auto n = static_cast<std::size_t>(a.rows());
    detail::require_size(n, max_size, "permanent");
    const std::uint64_t steps = std::uint64_t{1} << n;
    if (n < kParallelThreshold) {
        return {detail::ryser_range(a, 0, steps), false};
    }

    const std::uint64_t chunk = steps / kChunks;
    std::vector<Complex> partial(kChunks);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(kChunks); ++c) {
        const auto first = static_cast<std::uint64_t>(c) * chunk;
        partial[static_cast<std::size_t>(c)] = detail::ryser_range(a, first, first + chunk);
    }
    CompensatedSum<Complex> acc;
    for (const Complex &p : partial) acc.add(p);
    return {acc.value(), false};
}

MatrixFunctionValue determinant(const ComplexMatrix &a) {
    if (auto v = detail::shape_convention(a)) return *v;
    const Index n = a.rows();
    ComplexMatrix lu = a;
    Complex det(1.0, 0.0);
    for (Index k = 0; k < n; ++k) {
        Index pivot = k;
        double best = std::abs(lu(k, k));
        for (Index r = k + 1; r < n; ++r) {
            const double mag = std::abs(lu(r, k));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best == 0.0) return {Complex(0.0, 0.0), false};
        if (pivot != k) {
            lu.row(k).swap(lu.row(pivot));
            det = -det;
        }
        const Complex diag = lu(k, k);
        det *= diag;
        for (Index r = k + 1; r < n; ++r) {
            const Complex factor = lu(r, k) / diag;
            if (factor == Complex(0.0, 0.0)) continue;
            for (Index c = k + 1; c < n; ++c) lu(r, c) -= factor * lu(k, c);
        }
    }
    if (!std::isfinite(det.real()) || !std::isfinite(det.imag())) {
        throw Error(ErrorKind::Overflow, "determinant left the double range");
    }
    return {det, false};
}

Complex permanent_repeated(const ComplexMatrix &a, const Occupation &rows, const Occupation &cols,
                           std::size_t max_size) {
    if (rows.size() != static_cast<std::size_t>(a.rows()) || cols.size() != static_cast<std::size_t>(a.cols())) {
        throw Error(ErrorKind::DimensionMismatch, "occupation lengths do not match the matrix shape");
    }
    if (rows.total() != cols.total()) return Complex(0.0, 0.0);
    const int t = rows.total();
    if (t == 0) return Complex(1.0, 0.0);
    detail::require_size(static_cast<std::size_t>(t), max_size, "permanent");

    auto combos = [](const Occupation &occ) {
        double c = 1.0;
        bool first = true;
        for (int m : occ.counts()) {
            if (m == 0) continue;
            c *= first ? m : m + 1;
            first = false;
        }
        return c;
    };

    // Group the side with fewer sign assignments; the other side enters
    // through powers of the signed line sums.
    const bool group_rows = combos(rows) <= combos(cols);
    const Occupation &grouped = group_rows ? rows : cols;
    const Occupation &powered = group_rows ? cols : rows;

    std::vector<Index> g_modes;
    std::vector<int> g_mult;
    for (std::size_t s = 0; s < grouped.size(); ++s) {
        if (grouped[s] > 0) {
            g_modes.push_back(static_cast<Index>(s));
            g_mult.push_back(grouped[s]);
        }
    }
    std::vector<Index> p_modes;
    std::vector<int> p_mult;
    for (std::size_t s = 0; s < powered.size(); ++s) {
        if (powered[s] > 0) {
            p_modes.push_back(static_cast<Index>(s));
            p_mult.push_back(powered[s]);
        }
    }
    const std::size_t g_count = g_modes.size();
    const std::size_t p_count = p_modes.size();
    auto entry = [&](std::size_t g, std::size_t p) {
        return group_rows ? a(g_modes[g], p_modes[p]) : a(p_modes[p], g_modes[g]);
    };

    // The first copy of the first group has its sign pinned to +1.
    std::vector<int> radix(g_count);
    for (std::size_t g = 0; g < g_count; ++g) radix[g] = (g == 0 ? g_mult[g] - 1 : g_mult[g]) + 1;

    std::vector<Complex> sums(p_count, Complex(0.0, 0.0));
    for (std::size_t p = 0; p < p_count; ++p) {
        for (std::size_t g = 0; g < g_count; ++g) sums[p] += static_cast<double>(g_mult[g]) * entry(g, p);
    }

    const auto &binom = binomial_table();
    std::vector<int> minus(g_count, 0);
    std::vector<int> dir(g_count, 1);
    int sign = 1;
    CompensatedSum<Complex> acc;

    auto accumulate = [&] {
        double weight = sign;
        for (std::size_t g = 0; g < g_count; ++g) {
            weight *= binom[static_cast<std::size_t>(radix[g] - 1)][static_cast<std::size_t>(minus[g])];
        }
        Complex prod(weight, 0.0);
        for (std::size_t p = 0; p < p_count; ++p) {
            for (int e = 0; e < p_mult[p]; ++e) prod *= sums[p];
        }
        acc.add(prod);
    };

    accumulate();
    double total = 1.0;
    for (int r : radix) total *= r;
    const auto steps = static_cast<std::uint64_t>(total);
    // Reflected mixed-radix Gray code: one sign count changes by +-1 per step.
    for (std::uint64_t step = 1; step < steps; ++step) {
        std::size_t g = 0;
        while (true) {
            const int next = minus[g] + dir[g];
            if (next >= 0 && next < radix[g]) break;
            dir[g] = -dir[g];
            ++g;
        }
        minus[g] += dir[g];
        sign = -sign;
        const double delta = -2.0 * dir[g];
        for (std::size_t p = 0; p < p_count; ++p) sums[p] += delta * entry(g, p);
        accumulate();
    }
    return acc.value() / std::ldexp(1.0, t - 1);
}

}  // namespace interfere
