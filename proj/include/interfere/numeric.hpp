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

#ifndef INTERFERE_NUMERIC_HPP
#define INTERFERE_NUMERIC_HPP

#include <algorithm>
#include <cmath>
#include <complex>

namespace interfere {

/// Neumaier's variant of Kahan summation. Works for double and
/// std::complex<double> (real and imaginary parts are compensated separately).
template <typename T>
class CompensatedSum {
public:
    void add(const T &x) noexcept {
        if constexpr (std::is_floating_point_v<T>) {
            step(sum_, comp_, x);
        } else {
            double re = sum_.real(), im = sum_.imag();
            double cre = comp_.real(), cim = comp_.imag();
            step(re, cre, x.real());
            step(im, cim, x.imag());
            sum_ = T(re, im);
            comp_ = T(cre, cim);
        }
    }

    T value() const noexcept { return sum_ + comp_; }

private:
    static void step(double &sum, double &comp, double x) noexcept {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    T sum_{};
    T comp_{};
};

/// |x - y| / max(1, |x|, |y|): absolute near zero, relative elsewhere.
template <typename T>
double relative_error(const T &x, const T &y) {
    const double scale = std::max({1.0, std::abs(x), std::abs(y)});
    return std::abs(x - y) / scale;
}

}  // namespace interfere

#endif
