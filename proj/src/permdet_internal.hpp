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

#ifndef INTERFERE_PERMDET_INTERNAL_HPP
#define INTERFERE_PERMDET_INTERNAL_HPP

#include <cstdint>
#include <optional>

#include "interfere/permdet.hpp"

namespace interfere::detail {

/// Value fixed by shape alone (non-square -> 0, empty -> 1), if any. Throws
/// InvalidArgument on NaN/Inf entries.
std::optional<MatrixFunctionValue> shape_convention(const ComplexMatrix &a);
void require_size(std::size_t n, std::size_t max_size, const char *kernel);

/// Signed Ryser terms for Gray-code steps [first, last) of an n x n matrix,
/// step 0 being the empty subset (which contributes nothing).
Complex ryser_range(const ComplexMatrix &a, std::uint64_t first, std::uint64_t last);

}  // namespace interfere::detail

#endif
