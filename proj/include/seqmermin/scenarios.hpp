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
#include <vector>

#include "seqmermin/strategy.hpp"

namespace seqmermin {

/// Raised when the dense brute-force path is asked for more parties than it
/// supports.
class SizeLimitExceeded : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
};

inline constexpr std::size_t kBruteForceMaxParties = 12;
inline constexpr double kResidualTol = 1e-9;

/// P_k (2cos^2 + 4/3 sin^2) / 2^k + (8/3) sin cos gamma_k / 2^k.
double analytic_value_W(double theta, const std::vector<double> &gammas, std::size_t k);

/// N_n (theta gamma_k + theta P_k) / 2^(k-1).
double analytic_value_GHZ(ChainKind kind, std::size_t n, double theta,
                          const std::vector<double> &gammas, std::size_t k);

/// Dispatches on the scenario.
double analytic_value(ScenarioKind kind, std::size_t n, double theta,
                      const std::vector<double> &gammas, std::size_t k);

DensityMatrix initial_state(ScenarioKind kind, std::size_t n);

struct ReportRow {
    std::size_t k = 0;
    double gamma_k = 0.0;
    double P_k = 0.0;
    double I_analytic = 0.0;
    std::optional<double> I_bruteforce;
    bool violated = false;
};

/// Health of every state rho^(1..K) visited by a run.
struct StateDiagnostics {
    double max_trace_deviation = 0.0;
    double max_hermitian_defect = 0.0;
    /// Only filled when positivity checks were requested.
    std::optional<double> min_eigenvalue;
};

struct ViolationReport {
    ChainConfig config;
    std::vector<ReportRow> rows;
    bool all_violated = false;
    /// max |I_analytic - I_bruteforce|; nullopt in analytic-only runs.
    std::optional<double> max_residual;
    StateDiagnostics diagnostics;
};

struct RunOptions {
    bool brute_force = true;
    bool check_positivity = false;
};

/// Runs the chain: for each k builds the step-k observables, evaluates the
/// analytic and the density-matrix Mermin value, then applies the Lueders
/// update. Rows are violated iff the brute-force value exceeds 1 (analytic
/// value in analytic-only mode). The last gamma may sit on the sharp
/// boundary [0, 1]; earlier ones enter P_k and must lie in (0, 1).
ViolationReport run_scenario(const ChainConfig &config, RunOptions options = {});

struct GridResult {
    double max_residual = 0.0;
    StateDiagnostics diagnostics;
    std::size_t points = 0;
};

/// Runs every (theta, gamma list) combination of the grid through
/// run_scenario and returns the worst analytic/brute-force residual.
GridResult verify_formula_grid(ScenarioKind kind, std::size_t n,
                               const std::vector<double> &theta_grid,
                               const std::vector<std::vector<double>> &gamma_grid, std::size_t K,
                               bool check_positivity = false);

}  // namespace seqmermin
