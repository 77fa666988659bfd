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

#ifndef INTERFERE_MATRIX_HPP
#define INTERFERE_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "interfere/types.hpp"

namespace interfere {

inline constexpr double kDefaultUnitaryTolerance = 1e-12;

/// A square matrix that passed validate_unitary. Immutable.
class UnitaryMatrix {
public:
    const ComplexMatrix &matrix() const noexcept { return matrix_; }
    /// max-norm of U^dagger U - I at validation time.
    double unitarity_residual() const noexcept { return residual_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
    Complex operator()(std::size_t row, std::size_t col) const {
        return matrix_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

private:
    UnitaryMatrix(ComplexMatrix matrix, double residual) : matrix_(std::move(matrix)), residual_(residual) {}
    friend UnitaryMatrix validate_unitary(const ComplexMatrix &, double);

    ComplexMatrix matrix_;
    double residual_;
};

/// max |(M^dagger M - I)_kl|. M must be square.
double unitarity_residual(const ComplexMatrix &m);

/// Throws InvalidArgument if any entry has a NaN/Inf component.
void require_finite(const ComplexMatrix &m);

/// Throws NotSquare or NotUnitary (with the residual as value()).
UnitaryMatrix validate_unitary(const ComplexMatrix &m, double tolerance = kDefaultUnitaryTolerance);

/// U_kl = exp(-2 pi i k l / n) / sqrt(n) with k, l running over 1..n.
UnitaryMatrix fourier_matrix(std::size_t n);

/// (1/sqrt 2) [[1, 1], [1, -1]].
UnitaryMatrix balanced_beamsplitter();

UnitaryMatrix identity_unitary(std::size_t n);

/// Routes input mode k to output mode images[k]; images is a 0-based
/// permutation of 0..n-1.
UnitaryMatrix permutation_unitary(const std::vector<std::size_t> &images);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the R
/// diagonal made real-positive. Deterministic in (n, seed).
UnitaryMatrix haar_random_unitary(std::size_t n, std::uint64_t seed);

/// Square matrix with i.i.d. entries uniform in the complex unit disk.
ComplexMatrix random_disk_matrix(std::size_t n, std::uint64_t seed);

/// M_kl = |U_kl|^2 (doubly stochastic when U is unitary).
ComplexMatrix classical_matrix(const ComplexMatrix &u);
inline ComplexMatrix classical_matrix(const UnitaryMatrix &u) { return classical_matrix(u.matrix()); }

/// Row s of `a` repeated rows[s] times, column s repeated cols[s] times, in
/// mode order. The result is |rows| x |cols| and may be non-square.
ComplexMatrix submatrix_by_occupation(const ComplexMatrix &a, const Occupation &rows, const Occupation &cols);

/// Keeps exactly the listed rows and columns.
ComplexMatrix minor_keep(const ComplexMatrix &a, const Subset &rows, const Subset &cols);

struct Dilation {
    UnitaryMatrix unitary;
    double epsilon;
};

/// Embeds epsilon * A as the top-left block of an L x L unitary, with
/// epsilon = 1 / (2 ||A||_F + 1). Throws NotSquare, DimensionTooSmall (L < 2N).
Dilation unitary_dilation(const ComplexMatrix &a, std::size_t size);
inline Dilation unitary_dilation(const ComplexMatrix &a) {
    return unitary_dilation(a, 2 * static_cast<std::size_t>(a.rows()));
}

}  // namespace interfere

#endif
