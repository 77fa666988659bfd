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

#ifndef INTERFERE_CLI_HPP
#define INTERFERE_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "interfere/types.hpp"

namespace interfere::cli {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kIdentityFailure = 1;
inline constexpr int kInputError = 2;
inline constexpr int kBudgetError = 3;
}  // namespace exit_code

enum class OutputFormat { Json, Csv };

struct ScenarioConfig {
    /// file:PATH | beamsplitter | fourier:N | identity:N | permutation:P1,...,PN |
    /// haar:N[:SEED] | disk:N[:SEED]
    std::string matrix_source;
    int particle_budget = 4;
    double tolerance = 1e-10;
    double unitary_tolerance = 1e-12;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::Json;
    /// 0 means one thread per available core.
    int threads = 0;
};

/// Builds the matrix named by a source string. Unitarity is not checked here.
ComplexMatrix resolve_matrix_source(std::string_view source, std::uint64_t default_seed = 0);

/// 15 significant digits, "0" for both signed zeros.
std::string format_number(double value);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace interfere::cli

#endif
