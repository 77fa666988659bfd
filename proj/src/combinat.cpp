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

#include "interfere/combinat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "interfere/error.hpp"

namespace interfere {

double binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    k = std::min(k, n - k);
    double out = 1.0;
    for (std::size_t j = 1; j <= k; ++j) {
        out = out * static_cast<double>(n - k + j) / static_cast<double>(j);
    }
    return std::round(out);
}

std::vector<Occupation> enumerate_occupations(std::size_t modes, int total, std::size_t cap) {
    if (modes == 0) throw Error(ErrorKind::InvalidArgument, "mode count must be positive");
    if (total < 0) throw Error(ErrorKind::InvalidArgument, "particle total must be non-negative");
    const double count = binomial(static_cast<std::size_t>(total) + modes - 1, modes - 1);
    if (count > static_cast<double>(cap)) {
        throw Error(ErrorKind::BudgetExceeded,
                    std::to_string(static_cast<long double>(count)) + " patterns exceed the enumeration cap " +
                        std::to_string(cap),
                    count);
    }
    std::vector<Occupation> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<int> current(modes, 0);
    // Place as many particles as possible in the earliest free mode first.
    auto recurse = [&](auto &&self, std::size_t mode, int remaining) -> void {
        if (mode + 1 == modes) {
            current[mode] = remaining;
            out.emplace_back(current);
            return;
        }
        for (int c = remaining; c >= 0; --c) {
            current[mode] = c;
            self(self, mode + 1, remaining - c);
        }
    };
    recurse(recurse, 0, total);
    return out;
}

std::vector<Subset> enumerate_subsets(std::size_t modes, std::size_t m) {
    return enumerate_subsets_within(Occupation(std::vector<int>(modes, 1)), m);
}

std::vector<Subset> enumerate_subsets_within(const Occupation &mask, std::size_t m) {
    std::vector<std::size_t> allowed;
    for (std::size_t s = 0; s < mask.size(); ++s) {
        if (mask[s] > 0) allowed.push_back(s);
    }
    std::vector<Subset> out;
    if (m > allowed.size()) return out;
    std::vector<std::size_t> pick(m);
    for (std::size_t k = 0; k < m; ++k) pick[k] = k;
    while (true) {
        Subset s;
        s.indices.reserve(m);
        for (std::size_t k : pick) s.indices.push_back(allowed[k]);
        out.push_back(std::move(s));
        // Advance the rightmost index that still has room.
        std::size_t k = m;
        while (k > 0 && pick[k - 1] == allowed.size() - m + (k - 1)) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t r = k; r < m; ++r) pick[r] = pick[r - 1] + 1;
    }
    return out;
}

std::optional<Occupation> subtract_indicator(const Occupation &v, const Subset &alpha) {
    std::vector<int> counts = v.counts();
    for (std::size_t s : alpha.indices) {
        if (s >= counts.size()) throw Error(ErrorKind::DimensionMismatch, "subset index beyond the mode count");
        if (counts[s] == 0) return std::nullopt;
        counts[s] -= 1;
    }
    return Occupation(std::move(counts));
}

std::vector<Occupation> bounded_subvectors(const Occupation &v) {
    std::vector<int> caps(v.size());
    for (std::size_t s = 0; s < v.size(); ++s) caps[s] = std::min(v[s], 1);
    return dominated_vectors(Occupation(std::move(caps)));
}

std::vector<Occupation> dominated_vectors(const Occupation &v, std::size_t cap) {
    double count = 1.0;
    for (int c : v.counts()) count *= c + 1;
    if (count > static_cast<double>(cap)) {
        throw Error(ErrorKind::BudgetExceeded, "sub-pattern count exceeds the enumeration cap", count);
    }
    std::vector<Occupation> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<int> current(v.size(), 0);
    auto recurse = [&](auto &&self, std::size_t mode) -> void {
        if (mode == v.size()) {
            out.emplace_back(current);
            return;
        }
        for (int c = 0; c <= v[mode]; ++c) {
            current[mode] = c;
            self(self, mode + 1);
        }
        current[mode] = 0;
    };
    recurse(recurse, 0);
    return out;
}

std::uint64_t factorial_product(const Occupation &v) {
    std::uint64_t out = 1;
    for (int c : v.counts()) {
        if (c > 20) throw Error(ErrorKind::Overflow, "count " + std::to_string(c) + " exceeds 20! range");
        for (int k = 2; k <= c; ++k) {
            if (__builtin_mul_overflow(out, static_cast<std::uint64_t>(k), &out)) {
                throw Error(ErrorKind::Overflow, "factorial product exceeds 64 bits");
            }
        }
    }
    return out;
}

}  // namespace interfere
