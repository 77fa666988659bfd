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

#include "interfere/matrix.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "interfere/error.hpp"

namespace interfere {

namespace {

using Index = Eigen::Index;

// Principal square root of a Hermitian positive semi-definite matrix.
// Eigenvalues below zero come from rounding and are clamped.
ComplexMatrix hermitian_sqrt(const ComplexMatrix &h) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    Eigen::VectorXd values = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const ComplexMatrix &vectors = solver.eigenvectors();
    return vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint();
}

}  // namespace

double unitarity_residual(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::NotSquare, "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    if (m.rows() == 0) return 0.0;
    const ComplexMatrix defect = m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols());
    return defect.cwiseAbs().maxCoeff();
}

void require_finite(const ComplexMatrix &m) {
    for (Index c = 0; c < m.cols(); ++c) {
        for (Index r = 0; r < m.rows(); ++r) {
            if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) {
                throw Error(ErrorKind::InvalidArgument, "matrix entry (" + std::to_string(r + 1) + "," +
                                                            std::to_string(c + 1) + ") is not finite");
            }
        }
    }
}

UnitaryMatrix validate_unitary(const ComplexMatrix &m, double tolerance) {
    if (!(tolerance > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "unitarity tolerance must be positive");
    }
    require_finite(m);
    const double residual = unitarity_residual(m);
    if (!(residual <= tolerance)) {
        throw Error(ErrorKind::NotUnitary, "max |U^dagger U - I| = " + std::to_string(residual), residual);
    }
    return UnitaryMatrix(m, residual);
}

UnitaryMatrix fourier_matrix(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "Fourier size must be positive");
    ComplexMatrix u(static_cast<Index>(n), static_cast<Index>(n));
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t l = 1; l <= n; ++l) {
            const double phase = -2.0 * std::numbers::pi * static_cast<double>((k * l) % n) / static_cast<double>(n);
            u(static_cast<Index>(k - 1), static_cast<Index>(l - 1)) = std::polar(norm, phase);
        }
    }
    return validate_unitary(u);
}

UnitaryMatrix balanced_beamsplitter() {
    const double h = 1.0 / std::sqrt(2.0);
    ComplexMatrix u(2, 2);
    u << h, h, h, -h;
    return validate_unitary(u);
}

UnitaryMatrix identity_unitary(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "identity size must be positive");
    return validate_unitary(ComplexMatrix::Identity(static_cast<Index>(n), static_cast<Index>(n)));
}

UnitaryMatrix permutation_unitary(const std::vector<std::size_t> &images) {
    const std::size_t n = images.size();
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "permutation must be non-empty");
    std::vector<bool> seen(n, false);
    ComplexMatrix u = ComplexMatrix::Zero(static_cast<Index>(n), static_cast<Index>(n));
    for (std::size_t k = 0; k < n; ++k) {
        if (images[k] >= n || seen[images[k]]) {
            throw Error(ErrorKind::InvalidArgument, "not a permutation of 1.." + std::to_string(n));
        }
        seen[images[k]] = true;
        u(static_cast<Index>(images[k]), static_cast<Index>(k)) = 1.0;
    }
    return validate_unitary(u);
}

UnitaryMatrix haar_random_unitary(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "Haar size must be positive");
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    const Index size = static_cast<Index>(n);
    ComplexMatrix ginibre(size, size);
    for (Index c = 0; c < size; ++c) {
        for (Index r = 0; r < size; ++r) {
            const double re = normal(gen);
            const double im = normal(gen);
            ginibre(r, c) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(ginibre);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(size, size);
    const ComplexMatrix &packed = qr.matrixQR();
    for (Index k = 0; k < size; ++k) {
        const Complex d = packed(k, k);
        const double mag = std::abs(d);
        if (mag > 0.0) q.col(k) *= d / mag;
    }
    return validate_unitary(q);
}

ComplexMatrix random_disk_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const Index size = static_cast<Index>(n);
    ComplexMatrix a(size, size);
    for (Index c = 0; c < size; ++c) {
        for (Index r = 0; r < size; ++r) {
            const double radius = std::sqrt(uniform(gen));
            const double angle = 2.0 * std::numbers::pi * uniform(gen);
            a(r, c) = std::polar(radius, angle);
        }
    }
    return a;
}

ComplexMatrix classical_matrix(const ComplexMatrix &u) {
    return u.cwiseAbs2().cast<Complex>();
}

ComplexMatrix submatrix_by_occupation(const ComplexMatrix &a, const Occupation &rows, const Occupation &cols) {
    if (rows.size() != static_cast<std::size_t>(a.rows()) || cols.size() != static_cast<std::size_t>(a.cols())) {
        throw Error(ErrorKind::DimensionMismatch, "occupation lengths (" + std::to_string(rows.size()) + ", " +
                                                      std::to_string(cols.size()) + ") do not match a " +
                                                      std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                                      " matrix");
    }
    std::vector<Index> row_map;
    std::vector<Index> col_map;
    row_map.reserve(static_cast<std::size_t>(rows.total()));
    col_map.reserve(static_cast<std::size_t>(cols.total()));
    for (std::size_t s = 0; s < rows.size(); ++s) {
        for (int k = 0; k < rows[s]; ++k) row_map.push_back(static_cast<Index>(s));
    }
    for (std::size_t s = 0; s < cols.size(); ++s) {
        for (int k = 0; k < cols[s]; ++k) col_map.push_back(static_cast<Index>(s));
    }
    ComplexMatrix out(static_cast<Index>(row_map.size()), static_cast<Index>(col_map.size()));
    for (std::size_t c = 0; c < col_map.size(); ++c) {
        for (std::size_t r = 0; r < row_map.size(); ++r) {
            out(static_cast<Index>(r), static_cast<Index>(c)) = a(row_map[r], col_map[c]);
        }
    }
    return out;
}

ComplexMatrix minor_keep(const ComplexMatrix &a, const Subset &rows, const Subset &cols) {
    auto check = [](const Subset &s, Index bound, const char *what) {
        for (std::size_t k = 0; k < s.indices.size(); ++k) {
            if (static_cast<Index>(s.indices[k]) >= bound || (k > 0 && s.indices[k] <= s.indices[k - 1])) {
                throw Error(ErrorKind::IndexOutOfRange, std::string(what) + " subset is out of range or unsorted");
            }
        }
    };
    check(rows, a.rows(), "row");
    check(cols, a.cols(), "column");
    ComplexMatrix out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            out(static_cast<Index>(r), static_cast<Index>(c)) =
                a(static_cast<Index>(rows.indices[r]), static_cast<Index>(cols.indices[c]));
        }
    }
    return out;
}

Dilation unitary_dilation(const ComplexMatrix &a, std::size_t size) {
    if (a.rows() != a.cols()) {
        throw Error(ErrorKind::NotSquare, "only square matrices can be dilated");
    }
    require_finite(a);
    const Index n = a.rows();
    if (size < 2 * static_cast<std::size_t>(n) || size == 0) {
        throw Error(ErrorKind::DimensionTooSmall, "dilation size " + std::to_string(size) + " is below 2N = " +
                                                      std::to_string(2 * n));
    }
    const double epsilon = 1.0 / (2.0 * a.norm() + 1.0);
    const ComplexMatrix t = epsilon * a;
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);

    // Block form [[T, (I - T T^dagger)^1/2], [-(I - T^dagger T)^1/2, T^dagger]]
    // is unitary for any contraction T.
    const Index l = static_cast<Index>(size);
    ComplexMatrix v = ComplexMatrix::Identity(l, l);
    v.topLeftCorner(n, n) = t;
    v.block(0, n, n, n) = hermitian_sqrt(id - t * t.adjoint());
    v.block(n, 0, n, n) = -hermitian_sqrt(id - t.adjoint() * t);
    v.block(n, n, n, n) = t.adjoint();
    return Dilation{validate_unitary(v), epsilon};
}

}  // namespace interfere
