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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "interfere/error.hpp"
#include "interfere/matrix.hpp"
#include "interfere/numeric.hpp"
#include "interfere/permdet.hpp"
#include "permdet_internal.hpp"

namespace interfere {

namespace detail {

std::optional<MatrixFunctionValue> shape_convention(const ComplexMatrix &a) {
    require_finite(a);
    if (a.rows() != a.cols()) return MatrixFunctionValue{Complex(0.0, 0.0), true};
    if (a.rows() == 0) return MatrixFunctionValue{Complex(1.0, 0.0), true};
    return std::nullopt;
}

void require_size(std::size_t n, std::size_t max_size, const char *kernel) {
    if (n > max_size) {
        throw Error(ErrorKind::SizeLimit,
                    std::string(kernel) + " size " + std::to_string(n) + " exceeds cap " + std::to_string(max_size),
                    static_cast<double>(n));
    }
}

Complex ryser_range(const ComplexMatrix &a, std::uint64_t first, std::uint64_t last) {
    const int n = static_cast<int>(a.rows());
    std::vector<Complex> row_sums(static_cast<std::size_t>(n), Complex(0.0, 0.0));
    CompensatedSum<Complex> acc;

    auto accumulate = [&](std::uint64_t gray) {
        Complex prod(1.0, 0.0);
        for (int r = 0; r < n; ++r) prod *= row_sums[static_cast<std::size_t>(r)];
        // (-1)^(n - |S|)
        if (((n - std::popcount(gray)) & 1) != 0) prod = -prod;
        acc.add(prod);
    };

    std::uint64_t gray = first ^ (first >> 1);
    for (int c = 0; c < n; ++c) {
        if ((gray >> c) & 1U) {
            for (int r = 0; r < n; ++r) row_sums[static_cast<std::size_t>(r)] += a(r, c);
        }
    }
    if (first > 0) accumulate(gray);

    for (std::uint64_t k = first + 1; k < last; ++k) {
        const int bit = std::countr_zero(k);
        gray ^= std::uint64_t{1} << bit;
        if ((gray >> bit) & 1U) {
            for (int r = 0; r < n; ++r) row_sums[static_cast<std::size_t>(r)] += a(r, bit);
        } else {
            for (int r = 0; r < n; ++r) row_sums[static_cast<std::size_t>(r)] -= a(r, bit);
        }
        accumulate(gray);
    }
    return acc.value();
}

}  // namespace detail

MatrixFunctionValue permanent_serial(const ComplexMatrix &a, std::size_t max_size) {
    if (auto v = detail::shape_convention(a)) return *v;
    const auto n = static_cast<std::size_t>(a.rows());
    detail::require_size(n, max_size, "permanent");
    return {detail::ryser_range(a, 0, std::uint64_t{1} << n), false};
}

MatrixFunctionValue permanent_naive(const ComplexMatrix &a, std::size_t max_size) {
    if (auto v = detail::shape_convention(a)) return *v;
    const auto n = static_cast<std::size_t>(a.rows());
    detail::require_size(n, max_size, "naive permanent");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    CompensatedSum<Complex> acc;
    do {
        Complex prod(1.0, 0.0);
        for (std::size_t r = 0; r < n; ++r) prod *= a(static_cast<Eigen::Index>(r), perm[r]);
        acc.add(prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {acc.value(), false};
}

}  // namespace interfere
