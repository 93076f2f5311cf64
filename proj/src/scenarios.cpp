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

#include "seqmermin/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace seqmermin {

namespace {

void check_step_index(const std::vector<double> &gammas, std::size_t k) {
    if (k < 1 || k > gammas.size()) {
        throw InvalidInput("analytic value: step index outside 1..len(gammas)");
    }
}

void check_run_config(const ChainConfig &config) {
    check_party_count(config.kind, config.n);
    if (config.K == 0 || config.gammas.size() != config.K) {
        throw InvalidInput("run_scenario: need exactly K >= 1 gammas");
    }
    for (double g : config.gammas) {
        if (!(g >= 0.0 && g <= 1.0)) {
            throw InvalidInput("run_scenario: gamma outside [0, 1]");
        }
    }
    if (config.kind != ScenarioKind::WSingle3 && !(std::abs(config.theta) <= 1.0)) {
        throw InvalidInput("run_scenario: |theta| must not exceed 1 for GHZ strategies");
    }
}

void merge(StateDiagnostics &into, const StateDiagnostics &from) {
    into.max_trace_deviation = std::max(into.max_trace_deviation, from.max_trace_deviation);
    into.max_hermitian_defect = std::max(into.max_hermitian_defect, from.max_hermitian_defect);
    if (from.min_eigenvalue) {
        into.min_eigenvalue =
            into.min_eigenvalue ? std::min(*into.min_eigenvalue, *from.min_eigenvalue)
                                : *from.min_eigenvalue;
    }
}

}  // namespace

double analytic_value_W(double theta, const std::vector<double> &gammas, std::size_t k) {
    check_step_index(gammas, k);
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double scale = std::ldexp(1.0, -static_cast<int>(k));
    const double p = derive_P(gammas, k);
    return p * (2.0 * c * c + 4.0 * s * s / 3.0) * scale +
           8.0 * s * c * gammas[k - 1] / 3.0 * scale;
}

double analytic_value_GHZ(ChainKind kind, std::size_t n, double theta,
                          const std::vector<double> &gammas, std::size_t k) {
    check_step_index(gammas, k);
    const double N = scaling_constant(n, kind);
    const double p = derive_P(gammas, k);
    return N * (theta * gammas[k - 1] + theta * p) * std::ldexp(1.0, 1 - static_cast<int>(k));
}

double analytic_value(ScenarioKind kind, std::size_t n, double theta,
                      const std::vector<double> &gammas, std::size_t k) {
    check_party_count(kind, n);
    if (kind == ScenarioKind::WSingle3) {
        return analytic_value_W(theta, gammas, k);
    }
    return analytic_value_GHZ(chain_kind(kind), n, theta, gammas, k);
}

DensityMatrix initial_state(ScenarioKind kind, std::size_t n) {
    check_party_count(kind, n);
    return kind == ScenarioKind::WSingle3 ? DensityMatrix::w_state(n) : DensityMatrix::ghz(n);
}

ViolationReport run_scenario(const ChainConfig &config, RunOptions options) {
    check_run_config(config);
    if (options.brute_force && config.n > kBruteForceMaxParties) {
        throw SizeLimitExceeded("brute-force simulation supports at most " +
                                std::to_string(kBruteForceMaxParties) + " parties, got " +
                                std::to_string(config.n));
    }
    ViolationReport report;
    report.config = config;
    report.all_violated = true;

    std::optional<DensityMatrix> rho;
    if (options.brute_force) {
        rho.emplace(initial_state(config.kind, config.n));
    }
    for (std::size_t k = 1; k <= config.K; ++k) {
        ReportRow row;
        row.k = k;
        row.gamma_k = config.gammas[k - 1];
        row.P_k = derive_P(config.gammas, k);
        row.I_analytic = analytic_value(config.kind, config.n, config.theta, config.gammas, k);
        if (rho) {
            StateDiagnostics diag;
            diag.max_trace_deviation = rho->trace_deviation();
            diag.max_hermitian_defect = hermitian_defect(rho->matrix());
            if (options.check_positivity) {
                diag.min_eigenvalue = rho->min_eigenvalue();
            }
            merge(report.diagnostics, diag);

            const StepStrategy step =
                build_step(config.kind, config.n, config.theta, config.gammas[k - 1]);
            row.I_bruteforce = mermin_value(*rho, step.assignment);
            row.violated = *row.I_bruteforce > 1.0;
            const double residual = std::abs(row.I_analytic - *row.I_bruteforce);
            report.max_residual = std::max(report.max_residual.value_or(0.0), residual);
            if (k < config.K) {
                rho.emplace(luders_step(*rho, step.effects));
            }
        } else {
            row.violated = row.I_analytic > 1.0;
        }
        report.all_violated = report.all_violated && row.violated;
        report.rows.push_back(row);
    }
    return report;
}

GridResult verify_formula_grid(ScenarioKind kind, std::size_t n,
                               const std::vector<double> &theta_grid,
                               const std::vector<std::vector<double>> &gamma_grid, std::size_t K,
                               bool check_positivity) {
    check_party_count(kind, n);
    if (n > kBruteForceMaxParties) {
        throw SizeLimitExceeded("verify_formula_grid: n exceeds the brute-force cap");
    }
    GridResult result;
    RunOptions options;
    options.check_positivity = check_positivity;
    for (double theta : theta_grid) {
        for (const auto &gammas : gamma_grid) {
            if (gammas.size() < K) {
                throw InvalidInput("verify_formula_grid: gamma list shorter than K");
            }
            ChainConfig config{kind, n, K, theta, 0.0,
                               std::vector<double>(gammas.begin(), gammas.begin() + K)};
            const ViolationReport report = run_scenario(config, options);
            result.max_residual = std::max(result.max_residual, report.max_residual.value_or(0.0));
            merge(result.diagnostics, report.diagnostics);
            ++result.points;
        }
    }
    return result;
}

}  // namespace seqmermin
