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

#include "seqmermin/mermin.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace seqmermin {

namespace {

constexpr double kSpectrumSlack = 1e-10;
constexpr double kCoefficientResidue = 1e-12;
constexpr double kZeroCoefficient = 1e-14;

}  // namespace

void check_observable(const Observable &m) {
    if (!is_hermitian(m, kHermitianTol)) {
        throw InvalidInput("observable is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(m, Eigen::EigenvaluesOnly);
    const auto &values = solver.eigenvalues();
    if (values.minCoeff() < -1.0 - kSpectrumSlack || values.maxCoeff() > 1.0 + kSpectrumSlack) {
        throw InvalidInput("observable spectrum leaves [-1, 1]");
    }
}

ObservableAssignment::ObservableAssignment(std::vector<std::array<Observable, 2>> settings)
    : settings_(std::move(settings)) {
    if (settings_.empty()) {
        throw InvalidInput("observable assignment needs at least one party");
    }
    for (const auto &pair : settings_) {
        check_observable(pair[0]);
        check_observable(pair[1]);
    }
}

std::string MerminCoefficients::bitstring(std::uint64_t v) const {
    std::string out(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
        if ((v >> (n - 1 - i)) & 1U) {
            out[i] = '1';
        }
    }
    return out;
}

std::pair<ComplexMatrix, ComplexMatrix> mermin_recursion(const ObservableAssignment &assignment) {
    ComplexMatrix m = assignment.party(0)[0];
    ComplexMatrix m_prime = assignment.party(0)[1];
    for (std::size_t i = 1; i < assignment.n_parties(); ++i) {
        const auto &[a0, a1] = assignment.party(i);
        const ComplexMatrix sum = (a0 + a1) * 0.5;
        const ComplexMatrix diff = (a0 - a1) * 0.5;
        ComplexMatrix next = kron(m, sum) + kron(m_prime, diff);
        ComplexMatrix next_prime = kron(m, -diff) + kron(m_prime, sum);
        m = std::move(next);
        m_prime = std::move(next_prime);
    }
    return {std::move(m), std::move(m_prime)};
}

MerminCoefficients closed_form_coefficients(std::size_t n) {
    if (n < 1 || n > 20) {
        throw InvalidInput("closed_form_coefficients: n must lie in [1, 20]");
    }
    using std::numbers::pi;
    using std::numbers::sqrt2;
    const Complex l1 = std::polar(1.0, pi / 4);
    const Complex l2 = std::polar(1.0, -pi / 4);
    const int exponent = static_cast<int>(n) - 1;
    const Complex lead2 = std::pow(l2 / sqrt2, exponent);
    const Complex lead1 = std::pow(l1 / sqrt2, exponent);
    const double norm = std::pow(1.0 / sqrt2, exponent);
    const Complex up(1.0, 1.0);
    const Complex down(1.0, -1.0);

    // Values depend on |v| only.
    std::vector<double> by_weight_c(n + 1);
    std::vector<double> by_weight_cp(n + 1);
    for (std::size_t w = 0; w <= n; ++w) {
        const int k = static_cast<int>(w);
        const Complex c = 0.5 * (lead2 * std::pow(l1, 2 * k) + lead1 * std::pow(l2, 2 * k));
        const int power = static_cast<int>(n) - 2 * k;
        const Complex cp = norm * (std::pow(l2, power) * down + std::pow(l1, power) * up) /
                           (2.0 * sqrt2);
        if (std::abs(c.imag()) > kCoefficientResidue || std::abs(cp.imag()) > kCoefficientResidue) {
            throw std::logic_error("closed_form_coefficients: non-real coefficient");
        }
        by_weight_c[w] = std::abs(c.real()) < kCoefficientResidue ? 0.0 : c.real();
        by_weight_cp[w] = std::abs(cp.real()) < kCoefficientResidue ? 0.0 : cp.real();
    }

    MerminCoefficients out;
    out.n = n;
    const std::uint64_t count = std::uint64_t{1} << n;
    out.c.resize(count);
    out.c_prime.resize(count);
    for (std::uint64_t v = 0; v < count; ++v) {
        const auto w = static_cast<std::size_t>(std::popcount(v));
        out.c[v] = by_weight_c[w];
        out.c_prime[v] = by_weight_cp[w];
    }
    return out;
}

MerminCoefficients recursive_coefficients(std::size_t n) {
    if (n < 1 || n > 20) {
        throw InvalidInput("recursive_coefficients: n must lie in [1, 20]");
    }
    MerminCoefficients out;
    out.n = 1;
    out.c = {1.0, 0.0};
    out.c_prime = {0.0, 1.0};
    for (std::size_t m = 2; m <= n; ++m) {
        const std::size_t count = out.c.size();
        std::vector<double> c(2 * count);
        std::vector<double> cp(2 * count);
        for (std::size_t v = 0; v < count; ++v) {
            const double a = out.c[v];
            const double b = out.c_prime[v];
            c[2 * v] = (a + b) / 2;
            cp[2 * v] = (b - a) / 2;
            c[2 * v + 1] = (a - b) / 2;
            cp[2 * v + 1] = (a + b) / 2;
        }
        out.c = std::move(c);
        out.c_prime = std::move(cp);
        out.n = m;
    }
    return out;
}

double mermin_value(const DensityMatrix &rho, const ObservableAssignment &assignment) {
    if (rho.n_parties() != assignment.n_parties()) {
        throw InvalidInput("mermin_value: state and assignment disagree on party count");
    }
    const MerminCoefficients coeffs = closed_form_coefficients(assignment.n_parties());
    const std::vector<double> table = product_expectation_table(rho, assignment.settings());
    // Pairwise reduction keeps the sum order fixed and the rounding small.
    std::vector<double> terms(table.size());
    for (std::size_t v = 0; v < table.size(); ++v) {
        const double c = coeffs.c[v];
        terms[v] = std::abs(c) < kZeroCoefficient ? 0.0 : c * table[v];
    }
    for (std::size_t width = 1; width < terms.size(); width *= 2) {
        for (std::size_t i = 0; i + width < terms.size(); i += 2 * width) {
            terms[i] += terms[i + width];
        }
    }
    return terms.front();
}

double classical_deterministic_max(std::size_t n) {
    if (n < 2 || n > 6) {
        throw InvalidInput("classical_deterministic_max: n must lie in [2, 6]");
    }
    const MerminCoefficients coeffs = closed_form_coefficients(n);
    const std::uint64_t terms = std::uint64_t{1} << n;
    const std::uint64_t strategies = std::uint64_t{1} << (2 * n);
    double best = -std::numeric_limits<double>::infinity();
    // Strategy bits: party i uses bits (2i, 2i+1) for outputs on inputs 0, 1.
    for (std::uint64_t s = 0; s < strategies; ++s) {
        double total = 0.0;
        for (std::uint64_t v = 0; v < terms; ++v) {
            int sign = 1;
            for (std::size_t i = 0; i < n; ++i) {
                const unsigned input = (v >> (n - 1 - i)) & 1U;
                if ((s >> (2 * i + input)) & 1U) {
                    sign = -sign;
                }
            }
            total += coeffs.c[v] * sign;
        }
        best = std::max(best, total);
    }
    return best;
}

}  // namespace seqmermin
