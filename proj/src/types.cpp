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

#include "interfere/types.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "interfere/error.hpp"

namespace interfere {

Occupation::Occupation(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_) {
        if (c < 0) {
            throw Error(ErrorKind::InvalidArgument, "occupation counts must be non-negative");
        }
        total_ += c;
    }
}

Occupation Occupation::zeros(std::size_t modes) { return Occupation(std::vector<int>(modes, 0)); }

Occupation Occupation::from_modes(std::size_t modes, const std::vector<std::size_t> &occupied) {
    std::vector<int> counts(modes, 0);
    for (std::size_t m : occupied) {
        if (m >= modes) {
            throw Error(ErrorKind::IndexOutOfRange, "mode index out of range");
        }
        counts[m] += 1;
    }
    return Occupation(std::move(counts));
}

Occupation Occupation::parse(std::string_view text) {
    std::vector<int> counts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
            throw Error(ErrorKind::InvalidArgument, "malformed occupation list '" + std::string(text) + "'");
        }
        counts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Occupation(std::move(counts));
}

bool Occupation::is_binary() const noexcept {
    return std::all_of(counts_.begin(), counts_.end(), [](int c) { return c <= 1; });
}

int Occupation::max_count() const noexcept {
    return counts_.empty() ? 0 : *std::max_element(counts_.begin(), counts_.end());
}

bool Occupation::dominated_by(const Occupation &other) const noexcept {
    if (size() != other.size()) return false;
    for (std::size_t s = 0; s < size(); ++s) {
        if (counts_[s] > other.counts_[s]) return false;
    }
    return true;
}

Occupation Occupation::minus(const Occupation &other) const {
    if (!other.dominated_by(*this)) {
        throw Error(ErrorKind::InvalidArgument, "occupation difference would be negative");
    }
    std::vector<int> out(counts_);
    for (std::size_t s = 0; s < size(); ++s) out[s] -= other.counts_[s];
    return Occupation(std::move(out));
}

Occupation Occupation::padded(std::size_t modes) const {
    if (modes < size()) {
        throw Error(ErrorKind::DimensionMismatch, "cannot pad an occupation to fewer modes");
    }
    std::vector<int> out(counts_);
    out.resize(modes, 0);
    return Occupation(std::move(out));
}

std::string Occupation::to_string(char separator) const {
    std::string out;
    for (std::size_t s = 0; s < counts_.size(); ++s) {
        if (s) out.push_back(separator);
        out += std::to_string(counts_[s]);
    }
    return out;
}

bool Subset::contains(std::size_t mode) const noexcept {
    return std::binary_search(indices.begin(), indices.end(), mode);
}

Subset Subset::complement(std::size_t modes) const {
    Subset out;
    for (std::size_t m = 0; m < modes; ++m) {
        if (!contains(m)) out.indices.push_back(m);
    }
    return out;
}

}  // namespace interfere
