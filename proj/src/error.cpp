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

#include "interfere/error.hpp"

namespace interfere {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::NotUnitary: return "NotUnitary";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorKind::SizeLimit: return "SizeLimit";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::SingularDenominator: return "SingularDenominator";
        case ErrorKind::UnsupportedPattern: return "UnsupportedPattern";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message, double value)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), value_(value) {}

bool Error::is_budget_error() const noexcept {
    return kind_ == ErrorKind::SizeLimit || kind_ == ErrorKind::BudgetExceeded;
}

}  // namespace interfere
