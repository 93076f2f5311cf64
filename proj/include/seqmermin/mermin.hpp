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
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "seqmermin/linalg.hpp"

namespace seqmermin {

/// Per-party observable pairs (M_0^(i), M_1^(i)), party 1 first.
class ObservableAssignment {
   public:
    explicit ObservableAssignment(std::vector<std::array<Observable, 2>> settings);

    std::size_t n_parties() const { return settings_.size(); }
    const std::array<Observable, 2> &party(std::size_t i) const { return settings_.at(i); }
    const std::vector<std::array<Observable, 2>> &settings() const { return settings_; }

   private:
    std::vector<std::array<Observable, 2>> settings_;
};

/// Throws InvalidInput unless `m` is Hermitian with spectrum in [-1, 1]
/// (1e-10 slack).
void check_observable(const Observable &m);

/// Expansion coefficients (c_v, c'_v) of the Mermin pair (M_n, M'_n) over
/// product terms prod_i M_{v_i}^(i). Entry index v has party 1 as the most
/// significant bit; all 2^n entries are stored.
struct MerminCoefficients {
    std::size_t n = 0;
    std::vector<double> c;
    std::vector<double> c_prime;

    double at(std::uint64_t v) const { return c.at(v); }
    /// v rendered as an n-character bitstring, party 1 first.
    std::string bitstring(std::uint64_t v) const;
};

/// Operator recursion
///   M_n  = M_{n-1} (x) (A0 + A1)/2 + M'_{n-1} (x) (A0 - A1)/2
///   M'_n = M_{n-1} (x) (A1 - A0)/2 + M'_{n-1} (x) (A0 + A1)/2
/// with M_1 = A0^(1), M'_1 = A1^(1).
std::pair<ComplexMatrix, ComplexMatrix> mermin_recursion(const ObservableAssignment &assignment);

/// Closed-form coefficients
///   c_v = ((l2/sqrt2)^(n-1) l1^(2|v|) + (l1/sqrt2)^(n-1) l2^(2|v|)) / 2,
/// l1 = e^{i pi/4}, l2 = e^{-i pi/4}, and the companion c'_v from the
/// eigendecomposition of the one-step update. Evaluated in complex
/// arithmetic; the imaginary residue is asserted below 1e-12. 1 <= n <= 20.
MerminCoefficients closed_form_coefficients(std::size_t n);

/// Coefficients obtained by iterating the one-step update
///   (c_(v,0), c'_(v,0)) = ((c + c')/2, (c' - c)/2)
///   (c_(v,1), c'_(v,1)) = ((c - c')/2, (c + c')/2)
/// from (c_0, c'_0) = (1, 0), (c_1, c'_1) = (0, 1).
MerminCoefficients recursive_coefficients(std::size_t n);

/// <M_n> = sum_v c_v Tr[rho prod_i M_{v_i}^(i)].
double mermin_value(const DensityMatrix &rho, const ObservableAssignment &assignment);

/// Maximum of sum_v c_v prod_i a_i(v_i) over deterministic local strategies
/// a_i : {0,1} -> {+1,-1}. Full 4^n enumeration, 2 <= n <= 6.
double classical_deterministic_max(std::size_t n);

}  // namespace seqmermin
