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

#include "seqmermin/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace seqmermin {

std::string format15(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.15g", x);
    return buffer;
}

double round15(double x) {
    if (!std::isfinite(x)) {
        return x;
    }
    return std::strtod(format15(x).c_str(), nullptr);
}

nlohmann::json to_json(const MerminCoefficients &coeffs) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::uint64_t v = 0; v < coeffs.c.size(); ++v) {
        entries.push_back({{"v", coeffs.bitstring(v)},
                           {"c", round15(coeffs.c[v])},
                           {"c_prime", round15(coeffs.c_prime[v])}});
    }
    return {{"n", coeffs.n}, {"coefficients", std::move(entries)}};
}

nlohmann::json to_json(const ChainConfig &config) {
    nlohmann::json gammas = nlohmann::json::array();
    for (double g : config.gammas) {
        gammas.push_back(round15(g));
    }
    return {{"scenario", std::string(scenario_tag(config.kind))},
            {"n", config.n},
            {"K", config.K},
            {"theta", round15(config.theta)},
            {"epsilon", round15(config.epsilon)},
            {"gammas", std::move(gammas)}};
}

nlohmann::json to_json(const ViolationReport &report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : report.rows) {
        rows.push_back({{"k", row.k},
                        {"gamma_k", round15(row.gamma_k)},
                        {"P_k", round15(row.P_k)},
                        {"I_analytic", round15(row.I_analytic)},
                        {"I_bruteforce", row.I_bruteforce ? nlohmann::json(round15(*row.I_bruteforce))
                                                          : nlohmann::json(nullptr)},
                        {"violated", row.violated}});
    }
    nlohmann::json out = {{"config", to_json(report.config)},
                          {"rows", std::move(rows)},
                          {"all_violated", report.all_violated}};
    out["max_residual"] =
        report.max_residual ? nlohmann::json(round15(*report.max_residual)) : nlohmann::json(nullptr);
    out["max_trace_deviation"] = round15(report.diagnostics.max_trace_deviation);
    if (report.diagnostics.min_eigenvalue) {
        out["min_eigenvalue"] = round15(*report.diagnostics.min_eigenvalue);
    }
    return out;
}

ChainConfig chain_config_from_json(const nlohmann::json &j) {
    ChainConfig config;
    config.kind = scenario_from_tag(j.at("scenario").get<std::string>());
    config.n = j.at("n").get<std::size_t>();
    config.K = j.at("K").get<std::size_t>();
    config.theta = j.at("theta").get<double>();
    config.epsilon = j.at("epsilon").get<double>();
    config.gammas = j.at("gammas").get<std::vector<double>>();
    return config;
}

void write_csv(std::ostream &out, const MerminCoefficients &coeffs) {
    out << "v,c,c_prime\n";
    for (std::uint64_t v = 0; v < coeffs.c.size(); ++v) {
        out << coeffs.bitstring(v) << ',' << format15(coeffs.c[v]) << ','
            << format15(coeffs.c_prime[v]) << '\n';
    }
}

void write_csv(std::ostream &out, const ViolationReport &report) {
    out << "scenario,n,K,theta,epsilon,k,gamma_k,P_k,I_analytic,I_bruteforce,violated\n";
    const ChainConfig &c = report.config;
    for (const auto &row : report.rows) {
        out << scenario_tag(c.kind) << ',' << c.n << ',' << c.K << ',' << format15(c.theta) << ','
            << format15(c.epsilon) << ',' << row.k << ',' << format15(row.gamma_k) << ','
            << format15(row.P_k) << ',' << format15(row.I_analytic) << ','
            << (row.I_bruteforce ? format15(*row.I_bruteforce) : std::string()) << ','
            << (row.violated ? "true" : "false") << '\n';
    }
}

}  // namespace seqmermin
