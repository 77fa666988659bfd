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

#ifndef INTERFERE_COMBINAT_HPP
#define INTERFERE_COMBINAT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "interfere/types.hpp"

namespace interfere {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// C(n, k) as a double (exact up to 2^53).
double binomial(std::size_t n, std::size_t k);

/// All length-N vectors summing to `total`, in decreasing lexicographic
/// order: (2,0), (1,1), (0,2). Throws BudgetExceeded when there would be more
/// than `cap` of them.
std::vector<Occupation> enumerate_occupations(std::size_t modes, int total, std::size_t cap = kDefaultEnumerationCap);

/// All C(N, m) subsets of size m, in increasing lexicographic order.
std::vector<Subset> enumerate_subsets(std::size_t modes, std::size_t m);

/// Subsets of `modes` of size m restricted to modes where `mask` is positive.
std::vector<Subset> enumerate_subsets_within(const Occupation &mask, std::size_t m);

/// v - 1_alpha, or nullopt when some mode of alpha is empty in v.
std::optional<Occupation> subtract_indicator(const Occupation &v, const Subset &alpha);

/// All 0/1 vectors j with j_s <= min(v_s, 1), in increasing lexicographic
/// order: (0,0), (0,1), (1,0), (1,1).
std::vector<Occupation> bounded_subvectors(const Occupation &v);

/// All j with 0 <= j <= v componentwise, increasing lexicographic order.
std::vector<Occupation> dominated_vectors(const Occupation &v, std::size_t cap = kDefaultEnumerationCap);

/// prod v_s!. Throws Overflow if any count exceeds 20.
std::uint64_t factorial_product(const Occupation &v);

}  // namespace interfere

#endif
