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

#ifndef INTERFERE_ERROR_HPP
#define INTERFERE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace interfere {

enum class ErrorKind {
    NotSquare,
    NotUnitary,
    DimensionMismatch,
    IndexOutOfRange,
    DimensionTooSmall,
    SizeLimit,
    BudgetExceeded,
    Overflow,
    SingularDenominator,
    UnsupportedPattern,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `value()` carries the offending
/// quantity when one exists (the residual for NotUnitary, the requested size
/// for SizeLimit, ...), otherwise 0.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &message, double value = 0.0);

    ErrorKind kind() const noexcept { return kind_; }
    double value() const noexcept { return value_; }

    /// True for SizeLimit and BudgetExceeded: the request is well formed but
    /// too large for the configured caps.
    bool is_budget_error() const noexcept;

private:
    ErrorKind kind_;
    double value_;
};

}  // namespace interfere

#endif
