// Copyright 2026 The seqmermin Authors
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

#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "seqmermin/linalg.hpp"

namespace seqmermin::testing {

inline double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

/// Full 2^n operator I (x) ... (x) op (x) ... (x) I, built with kron only.
inline ComplexMatrix embed(std::size_t n, std::size_t qubit, const ComplexMatrix &op) {
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (std::size_t q = 0; q < n; ++q) {
        out = kron(out, q == qubit ? op : identity(2));
    }
    return out;
}

inline ComplexMatrix kron_all(const std::vector<Observable> &ops) {
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (const auto &op : ops) {
        out = kron(out, op);
    }
    return out;
}

inline ComplexMatrix random_matrix(std::mt19937_64 &rng, std::size_t dim) {
    std::normal_distribution<double> normal;
    ComplexMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            m(i, j) = Complex(normal(rng), normal(rng));
        }
    }
    return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64 &rng, std::size_t dim) {
    return hermitian_part(random_matrix(rng, dim));
}

/// G G^dagger / Tr, full rank with probability one.
inline DensityMatrix random_density(std::mt19937_64 &rng, std::size_t n) {
    const ComplexMatrix g = random_matrix(rng, std::size_t{1} << n);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace();
    return DensityMatrix(n, hermitian_part(rho));
}

/// Hermitian 2x2 with spectrum inside [-1, 1].
inline Observable random_observable(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const double a = uni(rng);
    const double x = uni(rng);
    const double y = uni(rng);
    const double z = uni(rng);
    const double r = std::sqrt(x * x + y * y + z * z);
    const double room = 1.0 - std::abs(a);
    const double scale = r > room ? room / r : 1.0;
    Observable m = a * Observable::Identity() +
                   scale * (x * pauli(1) + y * pauli(2) + z * pauli(3));
    return m;
}

}  // namespace seqmermin::testing
