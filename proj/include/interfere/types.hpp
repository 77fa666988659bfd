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

#ifndef INTERFERE_TYPES_HPP
#define INTERFERE_TYPES_HPP

#include <compare>
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace interfere {

using Complex = std::complex<double>;

/// Dense row/column complex matrix. Interferometers, their squared-modulus
/// companions and every derived submatrix live in this type.
using ComplexMatrix = Eigen::MatrixXcd;

/// Per-mode particle counts. Mode k of the user-facing 1-based numbering is
/// stored at index k-1.
class Occupation {
public:
    Occupation() = default;
    explicit Occupation(std::vector<int> counts);
    Occupation(std::initializer_list<int> counts) : Occupation(std::vector<int>(counts)) {}

    static Occupation zeros(std::size_t modes);
    /// One particle in each listed mode (0-based).
    static Occupation from_modes(std::size_t modes, const std::vector<std::size_t> &occupied);
    /// Parses "1,0,2". Throws InvalidArgument on anything else.
    static Occupation parse(std::string_view text);

    std::size_t size() const noexcept { return counts_.size(); }
    int total() const noexcept { return total_; }
    int operator[](std::size_t mode) const { return counts_[mode]; }
    const std::vector<int> &counts() const noexcept { return counts_; }

    /// Every count is 0 or 1.
    bool is_binary() const noexcept;
    int max_count() const noexcept;

    /// Componentwise comparison; false when dimensions differ.
    bool dominated_by(const Occupation &other) const noexcept;
    /// Componentwise difference; requires other <= *this.
    Occupation minus(const Occupation &other) const;
    /// Pads with zeros up to `modes` entries.
    Occupation padded(std::size_t modes) const;

    std::string to_string(char separator = ',') const;

    bool operator==(const Occupation &other) const noexcept { return counts_ == other.counts_; }
    auto operator<=>(const Occupation &other) const noexcept { return counts_ <=> other.counts_; }

private:
    std::vector<int> counts_;
    int total_ = 0;
};

/// Strictly increasing 0-based mode indices.
struct Subset {
    std::vector<std::size_t> indices;

    std::size_t size() const noexcept { return indices.size(); }
    bool empty() const noexcept { return indices.empty(); }
    bool contains(std::size_t mode) const noexcept;
    /// Complement within [0, modes).
    Subset complement(std::size_t modes) const;

    bool operator==(const Subset &) const = default;
};

/// Input and output pattern of one transition.
struct PatternPair {
    Occupation input;
    Occupation output;
};

}  // namespace interfere

#endif
