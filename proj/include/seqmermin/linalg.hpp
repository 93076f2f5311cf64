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

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace seqmermin {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Party 1 is the most significant qubit of
/// a basis index, i.e. the leftmost tensor factor.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// One party's measurement setting: a 2x2 Hermitian matrix with spectrum in
/// [-1, 1].
using Observable = Eigen::Matrix2cd;

/// Raised for inputs outside an operation's domain.
class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

/// sigma_1, sigma_2 or sigma_3.
Observable pauli(int index);

ComplexMatrix identity(std::size_t dim);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// max |m_ij - conj(m_ji)|; throws for non-square input.
double hermitian_defect(const ComplexMatrix &m);

bool is_hermitian(const ComplexMatrix &m, double tol = kHermitianTol);

/// (m + m^dagger) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix &m);

/// Closed-form sqrt((I + sign * gamma * sigma_index) / 2):
///   [(sqrt(1+g) + sqrt(1-g)) I + sign (sqrt(1+g) - sqrt(1-g)) sigma] / (2 sqrt 2)
Observable sqrt_effect(double gamma, int pauli_index, int sign);

/// Principal square root of a Hermitian PSD matrix via eigendecomposition.
/// Eigenvalues in [-1e-10, 0) are clamped to zero; anything more negative is
/// rejected.
ComplexMatrix sqrt_psd(const ComplexMatrix &m);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix &m);

/// Density operator on n qubits. Construction checks unit trace and
/// Hermiticity; positivity is checked on demand since it needs a full
/// eigendecomposition.
class DensityMatrix {
   public:
    DensityMatrix(std::size_t n_parties, ComplexMatrix matrix);

    static DensityMatrix from_pure(const Eigen::VectorXcd &psi);
    static DensityMatrix maximally_mixed(std::size_t n_parties);
    /// (|0...0> + |1...1>) / sqrt 2
    static DensityMatrix ghz(std::size_t n_parties);
    /// Equal superposition of the n single-excitation basis states.
    static DensityMatrix w_state(std::size_t n_parties);

    std::size_t n_parties() const { return n_parties_; }
    std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
    const ComplexMatrix &matrix() const { return matrix_; }

    double trace_deviation() const;
    double min_eigenvalue() const;
    /// Throws InvalidInput if the smallest eigenvalue is below -1e-10.
    void check_positive() const;

   private:
    std::size_t n_parties_;
    ComplexMatrix matrix_;
};

/// Re(Tr[rho * op]); the imaginary residue must be within 1e-10.
double expectation(const DensityMatrix &rho, const ComplexMatrix &op);

/// Tr[rho * (ops[0] (x) ops[1] (x) ... )] without materializing the product.
double product_expectation(const DensityMatrix &rho,
                           const std::vector<Observable> &ops);

/// Tr[rho * (settings[0][v_1] (x) ... (x) settings[n-1][v_n])] for every
/// v in {0,1}^n, indexed with party 1 as the most significant bit. Contracts
/// one party at a time, so the whole table costs O(4^n).
std::vector<double> product_expectation_table(
    const DensityMatrix &rho, const std::vector<std::array<Observable, 2>> &settings);

/// rho -> K rho K^dagger where K acts as `op` on the trailing log2(dim op)
/// qubits and as identity elsewhere.
ComplexMatrix conjugate_tail(const ComplexMatrix &rho, const ComplexMatrix &op);

/// rho -> K rho K^dagger where K acts as the 2x2 `op` on qubit `qubit`
/// (0-based, 0 = most significant).
ComplexMatrix conjugate_local(const ComplexMatrix &rho, std::size_t qubit,
                              const Observable &op);

}  // namespace seqmermin
