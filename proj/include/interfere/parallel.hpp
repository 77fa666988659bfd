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

#ifndef INTERFERE_PARALLEL_HPP
#define INTERFERE_PARALLEL_HPP

#include <cstdint>
#include <exception>
#include <vector>

#include "interfere/transition.hpp"

namespace interfere {

/// Evaluates fn(cache, k) for k in [0, count) on `threads` OpenMP threads,
/// each owning a PatternCache over `a`. Results are stored by index, so the
/// output order never depends on scheduling. The first exception thrown by
/// any worker is rethrown after the region.
template <typename Fn>
auto parallel_map_with_cache(const ComplexMatrix &a, std::size_t count, int threads, Fn fn) {
    using Result = decltype(fn(std::declval<PatternCache &>(), std::size_t{0}));
    std::vector<Result> results(count);
    std::exception_ptr failure;
#pragma omp parallel num_threads(threads > 0 ? threads : 1)
    {
        PatternCache cache(a);
#pragma omp for schedule(dynamic, 8)
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(count); ++k) {
            try {
                results[static_cast<std::size_t>(k)] = fn(cache, static_cast<std::size_t>(k));
            } catch (...) {
#pragma omp critical(interfere_parallel_failure)
                if (!failure) failure = std::current_exception();
            }
        }
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace interfere

#endif
