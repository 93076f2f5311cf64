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

#include "seqmermin/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "seqmermin/io.hpp"

namespace seqmermin {

namespace {

constexpr double kMinSampledGamma = 1e-6;

struct NRange {
    std::size_t first = 0;
    std::size_t last = 0;
};

NRange parse_range(const std::string &text) {
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const unsigned long value = std::stoul(text, &used);
            if (used != text.size()) {
                throw InvalidInput("");
            }
            return {value, value};
        }
        const std::string lo = text.substr(0, dots);
        const std::string hi = text.substr(dots + 2);
        const unsigned long first = std::stoul(lo, &used);
        if (used != lo.size()) {
            throw InvalidInput("");
        }
        const unsigned long last = std::stoul(hi, &used);
        if (used != hi.size() || last < first) {
            throw InvalidInput("");
        }
        return {first, last};
    } catch (const std::logic_error &) {
        throw InvalidInput("bad n range '" + text + "' (expected N or A..B)");
    }
}

void emit(std::ostream &out, const nlohmann::json &j) { out << j.dump(2) << '\n'; }

struct CoeffsArgs {
    int n = 0;
    std::string format = "json";
};

int cmd_coeffs(const CoeffsArgs &args, std::ostream &out) {
    if (args.n < 1 || args.n > 20) {
        throw InvalidInput("coeffs: --n must lie in [1, 20]");
    }
    const MerminCoefficients coeffs = closed_form_coefficients(static_cast<std::size_t>(args.n));
    if (args.format == "csv") {
        write_csv(out, coeffs);
    } else {
        emit(out, to_json(coeffs));
    }
    return kExitOk;
}

struct SimulateArgs {
    std::string scenario;
    int n = 3;
    int K = 1;
    bool K_given = false;
    std::string theta = "auto";
    double epsilon = kDefaultEpsilon;
    std::vector<double> gammas;
    std::string format = "json";
    bool analytic_only = false;
};

int cmd_simulate(const SimulateArgs &args, std::ostream &out, std::ostream &err) {
    const ScenarioKind kind = scenario_from_tag(args.scenario);
    if (args.n < 1) {
        throw InvalidInput("simulate: --n must be positive");
    }
    const auto n = static_cast<std::size_t>(args.n);
    check_party_count(kind, n);
    std::size_t K = static_cast<std::size_t>(std::max(args.K, 0));
    if (!args.K_given && !args.gammas.empty()) {
        K = args.gammas.size();
    }
    if (K == 0) {
        throw InvalidInput("simulate: --K must be positive");
    }
    if (!(args.epsilon > 0.0)) {
        throw InvalidInput("simulate: --epsilon must be positive");
    }

    ChainConfig config;
    if (args.theta == "auto") {
        if (!args.gammas.empty()) {
            throw InvalidInput("simulate: --gamma requires an explicit --theta");
        }
        const auto found = find_theta_window(kind, n, K, args.epsilon);
        if (!found) {
            err << "simulate: no feasible theta found on the search grid\n";
            return kExitNotViolated;
        }
        config = *found;
    } else {
        double theta = 0.0;
        try {
            std::size_t used = 0;
            theta = std::stod(args.theta, &used);
            if (used != args.theta.size()) {
                throw InvalidInput("");
            }
        } catch (const std::logic_error &) {
            throw InvalidInput("simulate: --theta must be a number or 'auto'");
        }
        config = ChainConfig{kind, n, K, theta, args.epsilon, args.gammas};
        if (config.gammas.empty()) {
            const auto gammas =
                kind == ScenarioKind::WSingle3
                    ? gamma_sequence_W(theta, args.epsilon, K)
                    : gamma_sequence_lemma(scaling_constant(n, chain_kind(kind)), theta,
                                           args.epsilon, K);
            if (!gammas) {
                err << "simulate: the gamma sequence is infeasible at theta = " << args.theta
                    << '\n';
                return kExitNotViolated;
            }
            config.gammas = *gammas;
        } else if (config.gammas.size() != K) {
            throw InvalidInput("simulate: number of --gamma values must equal --K");
        }
    }

    RunOptions options;
    options.brute_force = !args.analytic_only;
    const ViolationReport report = run_scenario(config, options);
    if (args.format == "csv") {
        write_csv(out, report);
    } else {
        emit(out, to_json(report));
    }
    const bool residual_ok = !report.max_residual || *report.max_residual <= kResidualTol;
    return report.all_violated && residual_ok ? kExitOk : kExitNotViolated;
}

struct VerifyArgs {
    std::string scenario;
    std::string n_range = "3";
    int K = 1;
    int samples = 20;
    unsigned seed = kDefaultVerifySeed;
    bool check_positivity = false;
};

int cmd_verify(const VerifyArgs &args, std::ostream &out) {
    const ScenarioKind kind = scenario_from_tag(args.scenario);
    const NRange range = parse_range(args.n_range);
    if (range.last > kBruteForceMaxParties) {
        throw SizeLimitExceeded("verify: n above the brute-force cap of " +
                                std::to_string(kBruteForceMaxParties));
    }
    for (std::size_t n = range.first; n <= range.last; ++n) {
        check_party_count(kind, n);
    }
    if (args.K < 1 || args.samples < 1) {
        throw InvalidInput("verify: --K and --samples must be positive");
    }
    const auto K = static_cast<std::size_t>(args.K);

    std::mt19937_64 rng(args.seed);
    const bool w = kind == ScenarioKind::WSingle3;
    std::uniform_real_distribution<double> theta_dist(w ? 0.0 : -1.0, w ? std::numbers::pi / 2 : 1.0);
    std::uniform_real_distribution<double> gamma_dist(kMinSampledGamma, 1.0);

    double worst = 0.0;
    for (std::size_t n = range.first; n <= range.last; ++n) {
        double worst_n = 0.0;
        double worst_trace = 0.0;
        std::optional<double> lowest_eig;
        for (int s = 0; s < args.samples; ++s) {
            const double theta = theta_dist(rng);
            std::vector<double> gammas(K);
            for (auto &g : gammas) {
                g = gamma_dist(rng);
            }
            const GridResult result =
                verify_formula_grid(kind, n, {theta}, {gammas}, K, args.check_positivity);
            worst_n = std::max(worst_n, result.max_residual);
            worst_trace = std::max(worst_trace, result.diagnostics.max_trace_deviation);
            if (result.diagnostics.min_eigenvalue) {
                lowest_eig = std::min(lowest_eig.value_or(*result.diagnostics.min_eigenvalue),
                                      *result.diagnostics.min_eigenvalue);
            }
        }
        out << "n=" << n << " samples=" << args.samples << " max_residual=" << format15(worst_n)
            << " max_trace_deviation=" << format15(worst_trace);
        if (lowest_eig) {
            out << " min_eigenvalue=" << format15(*lowest_eig);
        }
        out << '\n';
        worst = std::max(worst, worst_n);
    }
    const bool ok = worst <= kResidualTol;
    out << "scenario=" << scenario_tag(kind) << " max_residual=" << format15(worst)
        << " tolerance=" << format15(kResidualTol) << ' ' << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitOk : kExitNotViolated;
}

struct CertifyArgs {
    std::string scenario;
    int n = 3;
    int K = 1;
    double epsilon = kDefaultEpsilon;
    std::string out_path;
};

constexpr std::size_t kPositivityCheckMaxParties = 8;

int cmd_certify(const CertifyArgs &args, std::ostream &err) {
    const ScenarioKind kind = scenario_from_tag(args.scenario);
    if (args.n < 1 || args.K < 1) {
        throw InvalidInput("certify: --n and --K must be positive");
    }
    if (!(args.epsilon > 0.0)) {
        throw InvalidInput("certify: --epsilon must be positive");
    }
    const auto n = static_cast<std::size_t>(args.n);
    check_party_count(kind, n);
    const auto K = static_cast<std::size_t>(args.K);

    nlohmann::json certificate;
    bool ok = false;
    if (const auto config = find_theta_window(kind, n, K, args.epsilon)) {
        RunOptions options;
        options.check_positivity = n <= kPositivityCheckMaxParties;
        const ViolationReport report = run_scenario(*config, options);
        const double residual = report.max_residual.value_or(0.0);
        ok = report.all_violated && residual <= kResidualTol;
        certificate = {{"config", to_json(*config)},
                       {"report", to_json(report)},
                       {"max_residual", round15(residual)},
                       {"all_violated", report.all_violated}};
    } else {
        err << "certify: no feasible theta found on the search grid\n";
        certificate = {{"config", nullptr},
                       {"report", nullptr},
                       {"max_residual", nullptr},
                       {"all_violated", false}};
    }

    std::ofstream file(args.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "certify: cannot open '" << args.out_path << "' for writing\n";
        return kExitIoError;
    }
    file << certificate.dump(2) << '\n';
    file.flush();
    if (!file) {
        err << "certify: failed writing '" << args.out_path << "'\n";
        return kExitIoError;
    }
    return ok ? kExitOk : kExitNotViolated;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Sequential Mermin-inequality violation simulator", "seqmermin"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"json", "csv"};
    const std::vector<std::string> scenarios{"w-single", "ghz-single", "ghz-double"};

    CoeffsArgs coeffs;
    auto *coeffs_cmd = app.add_subcommand("coeffs", "Print the Mermin coefficient table");
    coeffs_cmd->add_option("--n", coeffs.n, "Number of parties (1..20)")->required();
    coeffs_cmd->add_option("--format", coeffs.format)->check(CLI::IsMember(formats));

    SimulateArgs sim;
    auto *sim_cmd = app.add_subcommand("simulate", "Run one sequential-measurement chain");
    sim_cmd->add_option("--scenario", sim.scenario)->required()->check(CLI::IsMember(scenarios));
    sim_cmd->add_option("--n", sim.n, "Number of parties");
    auto *k_opt = sim_cmd->add_option("--K", sim.K, "Chain length");
    sim_cmd->add_option("--theta", sim.theta, "Strategy angle or 'auto'");
    sim_cmd->add_option("--epsilon", sim.epsilon);
    sim_cmd->add_option("--gamma", sim.gammas, "Explicit sharpness values")->delimiter(',');
    sim_cmd->add_option("--format", sim.format)->check(CLI::IsMember(formats));
    sim_cmd->add_flag("--analytic-only", sim.analytic_only, "Skip the density-matrix simulation");

    VerifyArgs ver;
    auto *ver_cmd = app.add_subcommand("verify", "Compare closed forms with simulation");
    ver_cmd->add_option("--scenario", ver.scenario)->required()->check(CLI::IsMember(scenarios));
    ver_cmd->add_option("--n", ver.n_range, "Party count N or range A..B");
    ver_cmd->add_option("--K", ver.K);
    ver_cmd->add_option("--samples", ver.samples);
    ver_cmd->add_option("--seed", ver.seed);
    ver_cmd->add_flag("--check-positivity", ver.check_positivity);

    CertifyArgs cert;
    auto *cert_cmd = app.add_subcommand("certify", "Search, simulate and write a certificate");
    cert_cmd->add_option("--scenario", cert.scenario)->required()->check(CLI::IsMember(scenarios));
    cert_cmd->add_option("--n", cert.n);
    cert_cmd->add_option("--K", cert.K);
    cert_cmd->add_option("--epsilon", cert.epsilon);
    cert_cmd->add_option("--out", cert.out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitBadInput;
    }

    try {
        if (*coeffs_cmd) {
            return cmd_coeffs(coeffs, out);
        }
        if (*sim_cmd) {
            sim.K_given = k_opt->count() > 0;
            return cmd_simulate(sim, out, err);
        }
        if (*ver_cmd) {
            return cmd_verify(ver, out);
        }
        return cmd_certify(cert, err);
    } catch (const InvalidInput &e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
}

}  // namespace seqmermin
