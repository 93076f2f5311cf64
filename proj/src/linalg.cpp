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

#include "seqmermin/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace seqmermin {

namespace {

void require_square(const ComplexMatrix &m, const char *what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw InvalidInput(std::string(what) + ": matrix must be square and non-empty");
    }
}

std::size_t qubit_count(std::size_t dim) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim) {
        ++n;
    }
    if ((std::size_t{1} << n) != dim) {
        throw InvalidInput("dimension " + std::to_string(dim) + " is not a power of two");
    }
    return n;
}

}  // namespace

Observable pauli(int index) {
    Observable m;
    switch (index) {
        case 1:
            m << 0, 1, 1, 0;
            break;
        case 2:
            m << 0, Complex(0, -1), Complex(0, 1), 0;
            break;
        case 3:
            m << 1, 0, 0, -1;
            break;
        default:
            throw InvalidInput("pauli index must be 1, 2 or 3, got " + std::to_string(index));
    }
    return m;
}

ComplexMatrix identity(std::size_t dim) {
    return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                   static_cast<Eigen::Index>(dim));
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_square(a, "kron");
    require_square(b, "kron");
    const Eigen::Index da = a.rows();
    const Eigen::Index db = b.rows();
    ComplexMatrix out(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) {
            out.block(i * db, j * db, db, db) = a(i, j) * b;
        }
    }
    return out;
}

double hermitian_defect(const ComplexMatrix &m) {
    require_square(m, "hermitian_defect");
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix &m, double tol) { return hermitian_defect(m) <= tol; }

ComplexMatrix hermitian_part(const ComplexMatrix &m) {
    require_square(m, "hermitian_part");
    return (m + m.adjoint()) * 0.5;
}

Observable sqrt_effect(double gamma, int pauli_index, int sign) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw InvalidInput("sqrt_effect: gamma must lie in [0, 1]");
    }
    if (sign != 1 && sign != -1) {
        throw InvalidInput("sqrt_effect: sign must be +1 or -1");
    }
    const double plus = std::sqrt(1.0 + gamma);
    const double minus = std::sqrt(1.0 - gamma);
    const double scale = 1.0 / (2.0 * std::sqrt(2.0));
    return ((plus + minus) * Observable::Identity() +
            static_cast<double>(sign) * (plus - minus) * pauli(pauli_index)) *
           scale;
}

ComplexMatrix sqrt_psd(const ComplexMatrix &m) {
    require_square(m, "sqrt_psd");
    if (!is_hermitian(m, kHermitianTol)) {
        throw InvalidInput("sqrt_psd: input is not Hermitian");
    }
    const Eigen::MatrixXcd h = hermitian_part(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    Eigen::VectorXd values = solver.eigenvalues();
    if (values.minCoeff() < -kPsdTol) {
        throw InvalidInput("sqrt_psd: input has a negative eigenvalue");
    }
    values = values.cwiseMax(0.0).cwiseSqrt();
    const Eigen::MatrixXcd &vectors = solver.eigenvectors();
    ComplexMatrix root = vectors * values.asDiagonal() * vectors.adjoint();
    return hermitian_part(root);
}

double min_eigenvalue(const ComplexMatrix &m) {
    require_square(m, "min_eigenvalue");
    const Eigen::MatrixXcd h = hermitian_part(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

DensityMatrix::DensityMatrix(std::size_t n_parties, ComplexMatrix matrix)
    : n_parties_(n_parties), matrix_(std::move(matrix)) {
    if (n_parties_ == 0 || n_parties_ > 16) {
        throw InvalidInput("density matrix needs 1..16 parties");
    }
    const auto expected = static_cast<Eigen::Index>(std::size_t{1} << n_parties_);
    if (matrix_.rows() != expected || matrix_.cols() != expected) {
        throw InvalidInput("density matrix dimension does not match 2^n_parties");
    }
    if (!is_hermitian(matrix_, kHermitianTol)) {
        throw InvalidInput("density matrix is not Hermitian");
    }
    if (trace_deviation() > kTraceTol) {
        throw InvalidInput("density matrix trace differs from 1");
    }
}

DensityMatrix DensityMatrix::from_pure(const Eigen::VectorXcd &psi) {
    const std::size_t n = qubit_count(static_cast<std::size_t>(psi.size()));
    const Eigen::VectorXcd unit = psi / psi.norm();
    ComplexMatrix rho = unit * unit.adjoint();
    return DensityMatrix(n, hermitian_part(rho));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n_parties) {
    const std::size_t dim = std::size_t{1} << n_parties;
    return DensityMatrix(n_parties, identity(dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::ghz(std::size_t n_parties) {
    const std::size_t dim = std::size_t{1} << n_parties;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    psi(0) = 1.0;
    psi(static_cast<Eigen::Index>(dim - 1)) = 1.0;
    return from_pure(psi);
}

DensityMatrix DensityMatrix::w_state(std::size_t n_parties) {
    const std::size_t dim = std::size_t{1} << n_parties;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    for (std::size_t q = 0; q < n_parties; ++q) {
        psi(static_cast<Eigen::Index>(std::size_t{1} << q)) = 1.0;
    }
    return from_pure(psi);
}

double DensityMatrix::trace_deviation() const { return std::abs(matrix_.trace() - Complex(1.0)); }

double DensityMatrix::min_eigenvalue() const { return seqmermin::min_eigenvalue(matrix_); }

void DensityMatrix::check_positive() const {
    if (min_eigenvalue() < -kPsdTol) {
        throw InvalidInput("density matrix is not positive semidefinite");
    }
}

double expectation(const DensityMatrix &rho, const ComplexMatrix &op) {
    if (op.rows() != static_cast<Eigen::Index>(rho.dim()) || op.cols() != op.rows()) {
        throw InvalidInput("expectation: operator dimension does not match the state");
    }
    // Tr[rho op] = sum_ij rho_ij op_ji
    const Complex value = rho.matrix().cwiseProduct(op.transpose()).sum();
    if (std::abs(value.imag()) > kPsdTol) {
        throw InvalidInput("expectation: operator is not Hermitian (imaginary trace)");
    }
    return value.real();
}

std::vector<double> product_expectation_table(
    const DensityMatrix &rho, const std::vector<std::array<Observable, 2>> &settings) {
    if (settings.size() != rho.n_parties()) {
        throw InvalidInput("product_expectation_table: one setting pair per party required");
    }
    // Tr[rho (A (x) B)] = sum_{a,b} A_ba Tr_rest[rho_(a,b) B], so each party
    // contracts the leading qubit of every partial matrix.
    std::vector<ComplexMatrix> level{rho.matrix()};
    for (const auto &pair : settings) {
        std::vector<ComplexMatrix> next;
        next.reserve(level.size() * 2);
        for (const auto &partial : level) {
            const Eigen::Index half = partial.rows() / 2;
            for (const auto &op : pair) {
                ComplexMatrix reduced = ComplexMatrix::Zero(half, half);
                for (Eigen::Index a = 0; a < 2; ++a) {
                    for (Eigen::Index b = 0; b < 2; ++b) {
                        const Complex w = op(b, a);
                        if (w != Complex(0.0)) {
                            reduced += w * partial.block(a * half, b * half, half, half);
                        }
                    }
                }
                next.push_back(std::move(reduced));
            }
        }
        level = std::move(next);
    }
    std::vector<double> table;
    table.reserve(level.size());
    for (const auto &scalar : level) {
        const Complex value = scalar(0, 0);
        if (std::abs(value.imag()) > kPsdTol) {
            throw InvalidInput("product_expectation_table: observables are not Hermitian");
        }
        table.push_back(value.real());
    }
    return table;
}

double product_expectation(const DensityMatrix &rho, const std::vector<Observable> &ops) {
    if (ops.size() != rho.n_parties()) {
        throw InvalidInput("product_expectation: one operator per party required");
    }
    ComplexMatrix partial = rho.matrix();
    for (const auto &op : ops) {
        const Eigen::Index half = partial.rows() / 2;
        ComplexMatrix reduced = ComplexMatrix::Zero(half, half);
        for (Eigen::Index a = 0; a < 2; ++a) {
            for (Eigen::Index b = 0; b < 2; ++b) {
                reduced += op(b, a) * partial.block(a * half, b * half, half, half);
            }
        }
        partial = std::move(reduced);
    }
    const Complex value = partial(0, 0);
    if (std::abs(value.imag()) > kPsdTol) {
        throw InvalidInput("product_expectation: operators are not Hermitian");
    }
    return value.real();
}

ComplexMatrix conjugate_tail(const ComplexMatrix &rho, const ComplexMatrix &op) {
    require_square(rho, "conjugate_tail");
    require_square(op, "conjugate_tail");
    const Eigen::Index m = op.rows();
    if (rho.rows() % m != 0) {
        throw InvalidInput("conjugate_tail: operator does not divide the state dimension");
    }
    const Eigen::Index blocks = rho.rows() / m;
    const ComplexMatrix adj = op.adjoint();
    ComplexMatrix out(rho.rows(), rho.cols());
    for (Eigen::Index i = 0; i < blocks; ++i) {
        for (Eigen::Index j = 0; j < blocks; ++j) {
            out.block(i * m, j * m, m, m).noalias() = op * rho.block(i * m, j * m, m, m) * adj;
        }
    }
    return out;
}

ComplexMatrix conjugate_local(const ComplexMatrix &rho, std::size_t qubit, const Observable &op) {
    require_square(rho, "conjugate_local");
    const std::size_t dim = static_cast<std::size_t>(rho.rows());
    const std::size_t n = qubit_count(dim);
    if (qubit >= n) {
        throw InvalidInput("conjugate_local: qubit index out of range");
    }
    const std::size_t stride = std::size_t{1} << (n - 1 - qubit);
    ComplexMatrix out = rho;
    // Left multiply: mix row pairs (i, i + stride).
    for (std::size_t i = 0; i < dim; ++i) {
        if (i & stride) {
            continue;
        }
        const auto r0 = static_cast<Eigen::Index>(i);
        const auto r1 = static_cast<Eigen::Index>(i | stride);
        for (Eigen::Index c = 0; c < static_cast<Eigen::Index>(dim); ++c) {
            const Complex x0 = out(r0, c);
            const Complex x1 = out(r1, c);
            out(r0, c) = op(0, 0) * x0 + op(0, 1) * x1;
            out(r1, c) = op(1, 0) * x0 + op(1, 1) * x1;
        }
    }
    // Right multiply by op^dagger: mix column pairs.
    const Observable adj = op.adjoint();
    for (std::size_t j = 0; j < dim; ++j) {
        if (j & stride) {
            continue;
        }
        const auto c0 = static_cast<Eigen::Index>(j);
        const auto c1 = static_cast<Eigen::Index>(j | stride);
        for (Eigen::Index r = 0; r < static_cast<Eigen::Index>(dim); ++r) {
            const Complex x0 = out(r, c0);
            const Complex x1 = out(r, c1);
            out(r, c0) = x0 * adj(0, 0) + x1 * adj(1, 0);
            out(r, c1) = x0 * adj(0, 1) + x1 * adj(1, 1);
        }
    }
    return out;
}

}  // namespace seqmermin
