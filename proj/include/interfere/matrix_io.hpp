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

#ifndef INTERFERE_MATRIX_IO_HPP
#define INTERFERE_MATRIX_IO_HPP

#include <string>
#include <string_view>

#include "interfere/types.hpp"

namespace interfere {

/// Parses {"rows": R, "cols": C, "entries": [[re, im], ...]} (row-major).
/// Throws InvalidArgument on malformed documents or non-finite entries.
ComplexMatrix parse_matrix_json(std::string_view text);
ComplexMatrix load_matrix_json(const std::string &path);

/// Inverse of parse_matrix_json, full double precision.
std::string matrix_to_json(const ComplexMatrix &m);

}  // namespace interfere

#endif
