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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqmermin/luders.hpp"
#include "seqmermin/mermin.hpp"

namespace seqmermin {

enum class ScenarioKind {
    WSingle3,   // W state, one chain at party 3
    GhzSingle,  // GHZ state, one chain at party n
    GhzDouble,  // GHZ state, chains at parties n-1 and n
};

enum class ChainKind { Single, Double };

/// "W_SINGLE_3", "GHZ_SINGLE", "GHZ_DOUBLE".
std::string_view scenario_tag(ScenarioKind kind);
ScenarioKind scenario_from_tag(std::string_view tag);

ChainKind chain_kind(ScenarioKind kind);

/// Throws InvalidInput unless n is allowed for the scenario (W: n = 3,
/// GHZ single: n >= 3, GHZ double: n >= 4).
void check_party_count(ScenarioKind kind, std::size_t n);

struct ChainConfig {
    ScenarioKind kind = ScenarioKind::GhzSingle;
    std::size_t n = 3;
    std::size_t K = 1;
    double theta = 0.0;
    double epsilon = 0.01;
    std::vector<double> gammas;

    /// 0 < gamma_1 < ... < gamma_K < 1 and, for GHZ scenarios, theta * N_n > 0.
    bool feasible() const;
};

inline constexpr double kDefaultEpsilon = 0.01;

/// N_n for the GHZ strategies (mod-4 case table).
double scaling_constant(std::size_t n, ChainKind kind);

/// The same constant written through the eigenvalues l1 = e^{i pi/4},
/// l2 = e^{-i pi/4} of the coefficient update, e.g.
/// (sqrt2)^(n-1) (l1^(n-1) + l2^(n-1)) / 4 for the plain single chain.
double scaling_constant_complex(std::size_t n, ChainKind kind);

/// The two prefactors multiplying theta P_k / 2^(k-1) and theta gamma_k /
/// 2^(k-1), summed term by term over v: c_v times the GHZ expectation of the
/// Pauli string selected by v (and the observable signs) at the first step.
std::pair<double, double> scaling_constant_from_sums(std::size_t n, ChainKind kind);

/// Observables for the Mermin value at step k and the chain effects that
/// turn rho^(k) into rho^(k+1). k is 1-based.
struct StepStrategy {
    ObservableAssignment assignment;
    ChainStepEffects effects;
};

StepStrategy build_observables(const ChainConfig &config, std::size_t k);

/// Same as build_observables with theta and gamma_k given directly; used by
/// the verification harness where gammas need not be monotone.
StepStrategy build_step(ScenarioKind kind, std::size_t n, double theta, double gamma);

/// P_k = prod_{j<k} (1 + sqrt(1 - gamma_j^2)); P_1 = 1.
double derive_P(const std::vector<double> &gammas, std::size_t k);

/// gamma_k = (1+eps) (2^k - P_k (2 - 2 sin^2(theta)/3)) / (8 sin(theta) cos(theta)/3).
/// nullopt when some gamma_k leaves (0, 1).
std::optional<std::vector<double>> gamma_sequence_W(double theta, double epsilon, std::size_t K);

/// gamma_k = (1+eps) (2^(k-1) / (theta N) - P_k). nullopt when some gamma_k
/// leaves (0, 1).
std::optional<std::vector<double>> gamma_sequence_lemma(double N, double theta, double epsilon,
                                                        std::size_t K);

/// Geometric scan toward the accumulation point of the feasibility window
/// (0+ for W, 1/N_n from the inside for GHZ). Returns the first grid point
/// whose sequence is feasible and whose K analytic values exceed 1 + 1e-9.
std::optional<ChainConfig> find_theta_window(ScenarioKind kind, std::size_t n, std::size_t K,
                                             double epsilon = kDefaultEpsilon);

}  // namespace seqmermin
