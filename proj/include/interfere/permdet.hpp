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

#ifndef INTERFERE_PERMDET_HPP
#define INTERFERE_PERMDET_HPP

#include <cstddef>

#include "interfere/types.hpp"

namespace interfere {

inline constexpr std::size_t kDefaultPermanentCap = 20;
inline constexpr std::size_t kDefaultNaivePermanentCap = 9;

/// A permanent or determinant together with a flag recording whether the
/// shape convention (0x0 -> 1, non-square -> 0) produced the value.
struct MatrixFunctionValue {
    Complex value;
    bool convention_applied = false;
};

/// Ryser's formula with Gray-code subset updates, O(2^n n). The subset range
/// is cut into a fixed number of chunks that OpenMP threads evaluate
/// independently; chunk sums are recombined in chunk order, so the value
/// does not depend on the thread count. Throws SizeLimit when n > max_size.
MatrixFunctionValue permanent(const ComplexMatrix &a, std::size_t max_size = kDefaultPermanentCap);

/// Single-pass serial Gray-code Ryser. Reference for permanent() and the
/// baseline in the kernel benchmark.
MatrixFunctionValue permanent_serial(const ComplexMatrix &a, std::size_t max_size = kDefaultPermanentCap);

/// Sum over all n! permutations. Oracle only; throws SizeLimit when n > max_size.
MatrixFunctionValue permanent_naive(const ComplexMatrix &a, std::size_t max_size = kDefaultNaivePermanentCap);

/// LU factorization with partial pivoting, O(n^3). Throws Overflow when the
/// product leaves the double range.
MatrixFunctionValue determinant(const ComplexMatrix &a);

/// per(a_{rows, cols}) without materializing the repeated matrix: Glynn's
/// formula summed over how many copies of each repeated line carry a minus
/// sign, weighted by binomial multiplicities. Cost is prod(m_g + 1) over the
/// grouped side (the cheaper of rows and columns is chosen) instead of 2^t.
/// Same conventions as permanent(); SizeLimit when the pattern total exceeds
/// max_size.
Complex permanent_repeated(const ComplexMatrix &a, const Occupation &rows, const Occupation &cols,
                           std::size_t max_size = kDefaultPermanentCap);

}  // namespace interfere

#endif
