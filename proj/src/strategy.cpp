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

#include "seqmermin/strategy.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>

#include "seqmermin/scenarios.hpp"

namespace seqmermin {

namespace {

constexpr double kViolationMargin = 1e-9;
constexpr int kGridRefinements = 60;
constexpr double kGridRatio = 0.5;

int floor_quarter_sign(std::size_t n, int extra) { return ((n / 4 + extra) % 2 == 0) ? 1 : -1; }

Observable scaled(int index, double scale) { return scale * pauli(index); }

double ghz_string_expectation(int sigma2_count) {
    // <GHZ| string of sigma_1/sigma_2 |GHZ> = (i^m + (-i)^m) / 2
    switch (((sigma2_count % 4) + 4) % 4) {
        case 0:
            return 1.0;
        case 2:
            return -1.0;
        default:
            return 0.0;
    }
}

// Decomposes a strategy observable at theta = gamma = 1 into sign * sigma_j.
std::pair<int, int> signed_pauli(const Observable &m) {
    for (int index = 1; index <= 2; ++index) {
        const double coef = ((pauli(index) * m).trace() * 0.5).real();
        if (std::abs(std::abs(coef) - 1.0) < 1e-14 &&
            (m - coef * pauli(index)).cwiseAbs().maxCoeff() < 1e-14) {
            return {index, coef > 0 ? 1 : -1};
        }
    }
    throw std::logic_error("strategy observable is not +/- sigma_1 or sigma_2");
}

}  // namespace

std::string_view scenario_tag(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::WSingle3:
            return "W_SINGLE_3";
        case ScenarioKind::GhzSingle:
            return "GHZ_SINGLE";
        case ScenarioKind::GhzDouble:
            return "GHZ_DOUBLE";
    }
    throw std::logic_error("unknown scenario kind");
}

ScenarioKind scenario_from_tag(std::string_view tag) {
    if (tag == "W_SINGLE_3" || tag == "w-single") {
        return ScenarioKind::WSingle3;
    }
    if (tag == "GHZ_SINGLE" || tag == "ghz-single") {
        return ScenarioKind::GhzSingle;
    }
    if (tag == "GHZ_DOUBLE" || tag == "ghz-double") {
        return ScenarioKind::GhzDouble;
    }
    throw InvalidInput("unknown scenario '" + std::string(tag) + "'");
}

ChainKind chain_kind(ScenarioKind kind) {
    return kind == ScenarioKind::GhzDouble ? ChainKind::Double : ChainKind::Single;
}

void check_party_count(ScenarioKind kind, std::size_t n) {
    switch (kind) {
        case ScenarioKind::WSingle3:
            if (n != 3) {
                throw InvalidInput("W_SINGLE_3 requires n = 3");
            }
            return;
        case ScenarioKind::GhzSingle:
            if (n < 3) {
                throw InvalidInput("GHZ_SINGLE requires n >= 3");
            }
            return;
        case ScenarioKind::GhzDouble:
            if (n < 4) {
                throw InvalidInput("GHZ_DOUBLE requires n >= 4");
            }
            return;
    }
}

bool ChainConfig::feasible() const {
    if (gammas.size() != K || K == 0) {
        return false;
    }
    double previous = 0.0;
    for (double g : gammas) {
        if (!(g > previous && g < 1.0)) {
            return false;
        }
        previous = g;
    }
    if (kind != ScenarioKind::WSingle3) {
        return theta * scaling_constant(n, chain_kind(kind)) > 0.0;
    }
    return true;
}

double scaling_constant(std::size_t n, ChainKind kind) {
    using std::numbers::sqrt2;
    const auto root2 = [](int e) { return std::pow(sqrt2, e); };
    const int ni = static_cast<int>(n);
    if (kind == ChainKind::Single) {
        if (n < 3) {
            throw InvalidInput("scaling_constant: single chain needs n >= 3");
        }
        switch (n % 4) {
            case 1:
            case 3:
                return root2(ni - 3) * floor_quarter_sign(n, 0);
            default:
                return root2(ni - 4) * floor_quarter_sign(n, 0);
        }
    }
    if (n < 4) {
        throw InvalidInput("scaling_constant: double chain needs n >= 4");
    }
    switch (n % 4) {
        case 0:
            // Sign as obtained from the coefficient sums; see
            // scaling_constant_complex.
            return root2(ni - 4) * floor_quarter_sign(n, 0);
        case 1:
            return root2(ni - 5) * floor_quarter_sign(n, 0);
        case 2:
            return root2(ni - 4) * floor_quarter_sign(n, 0);
        default:
            return root2(ni - 5) * floor_quarter_sign(n, 1);
    }
}

double scaling_constant_complex(std::size_t n, ChainKind kind) {
    using std::numbers::pi;
    using std::numbers::sqrt2;
    const Complex l1 = std::polar(1.0, pi / 4);
    const Complex l2 = std::polar(1.0, -pi / 4);
    const Complex i(0.0, 1.0);
    const int e = static_cast<int>(n) - 1;
    const Complex p1 = std::pow(l1, e);
    const Complex p2 = std::pow(l2, e);
    const double lead = std::pow(sqrt2, e);
    Complex value;
    if (kind == ChainKind::Single) {
        if (n < 3) {
            throw InvalidInput("scaling_constant_complex: single chain needs n >= 3");
        }
        value = (n % 4 == 3) ? lead * (-i * p1 + i * p2) / 4.0 : lead * (p1 + p2) / 4.0;
    } else {
        if (n < 4) {
            throw InvalidInput("scaling_constant_complex: double chain needs n >= 4");
        }
        value = (n % 4 == 2) ? lead * ((1.0 - i) * p1 + (1.0 + i) * p2) / 8.0
                             : lead * ((1.0 + i) * p1 + (1.0 - i) * p2) / 8.0;
    }
    return value.real();
}

std::pair<double, double> scaling_constant_from_sums(std::size_t n, ChainKind kind) {
    const ScenarioKind scenario =
        kind == ChainKind::Single ? ScenarioKind::GhzSingle : ScenarioKind::GhzDouble;
    check_party_count(scenario, n);
    const StepStrategy step = build_step(scenario, n, 1.0, 1.0);
    const MerminCoefficients coeffs = closed_form_coefficients(n);
    double on_p = 0.0;
    double on_gamma = 0.0;
    for (std::uint64_t v = 0; v < coeffs.c.size(); ++v) {
        int sign = 1;
        int sigma2 = 0;
        for (std::size_t party = 0; party < n; ++party) {
            const unsigned bit = (v >> (n - 1 - party)) & 1U;
            const auto [index, s] = signed_pauli(step.assignment.party(party)[bit]);
            sign *= s;
            sigma2 += index == 2 ? 1 : 0;
        }
        const double term = coeffs.c[v] * sign * ghz_string_expectation(sigma2);
        if (v & 1U) {
            on_gamma += term;
        } else {
            on_p += term;
        }
    }
    return {on_p, on_gamma};
}

StepStrategy build_step(ScenarioKind kind, std::size_t n, double theta, double gamma) {
    check_party_count(kind, n);
    const Observable s1 = pauli(1);
    const Observable s2 = pauli(2);
    const Observable s3 = pauli(3);
    std::vector<std::array<Observable, 2>> settings;
    ChainStepEffects effects;
    switch (kind) {
        case ScenarioKind::WSingle3: {
            const double s = std::sin(theta);
            const double c = std::cos(theta);
            const std::array<Observable, 2> outer{s * s1 + c * s3, s * s1 - c * s3};
            settings = {outer, outer, {s3, scaled(1, gamma)}};
            effects.slots.push_back({3, settings[2]});
            break;
        }
        case ScenarioKind::GhzSingle: {
            settings.assign(n - 2, {s1, s2});
            if (n % 4 == 3) {
                settings.push_back({scaled(2, -theta), scaled(1, theta)});
            } else {
                settings.push_back({scaled(1, theta), scaled(2, theta)});
            }
            settings.push_back({s1, scaled(2, gamma)});
            effects.slots.push_back({n, settings.back()});
            break;
        }
        case ScenarioKind::GhzDouble: {
            settings.push_back({scaled(1, theta), scaled(2, theta)});
            for (std::size_t j = 2; j <= n - 2; ++j) {
                settings.push_back({s1, s2});
            }
            if (n % 4 == 2) {
                settings.push_back({-s2, s2});
            } else {
                settings.push_back({s2, s2});
            }
            settings.push_back({s1, scaled(2, gamma)});
            effects.slots.push_back({n - 1, settings[n - 2]});
            effects.slots.push_back({n, settings[n - 1]});
            break;
        }
    }
    return StepStrategy{ObservableAssignment(std::move(settings)), std::move(effects)};
}

StepStrategy build_observables(const ChainConfig &config, std::size_t k) {
    if (!config.feasible()) {
        throw InvalidInput("build_observables: infeasible chain configuration");
    }
    if (k < 1 || k > config.K) {
        throw InvalidInput("build_observables: step index outside 1..K");
    }
    return build_step(config.kind, config.n, config.theta, config.gammas[k - 1]);
}

double derive_P(const std::vector<double> &gammas, std::size_t k) {
    if (k < 1 || k > gammas.size() + 1) {
        throw InvalidInput("derive_P: step index outside 1..len+1");
    }
    double product = 1.0;
    for (std::size_t j = 0; j + 1 < k; ++j) {
        const double g = gammas[j];
        if (!(g > 0.0 && g < 1.0)) {
            throw InvalidInput("derive_P: gamma outside (0, 1)");
        }
        product *= 1.0 + std::sqrt(1.0 - g * g);
    }
    return product;
}

std::optional<std::vector<double>> gamma_sequence_W(double theta, double epsilon, std::size_t K) {
    if (!(theta > 0.0 && theta < std::numbers::pi / 2)) {
        throw InvalidInput("gamma_sequence_W: theta must lie in (0, pi/2)");
    }
    if (!(epsilon > 0.0)) {
        throw InvalidInput("gamma_sequence_W: epsilon must be positive");
    }
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double denominator = 8.0 * s * c / 3.0;
    std::vector<double> gammas;
    gammas.reserve(K);
    for (std::size_t k = 1; k <= K; ++k) {
        const double p = derive_P(gammas, k);
        // 2^k - p (2 - 2 s^2 / 3), grouped so k = 1 does not cancel.
        const double numerator =
            (std::ldexp(1.0, static_cast<int>(k)) - 2.0 * p) + 2.0 * p * s * s / 3.0;
        const double g = (1.0 + epsilon) * numerator / denominator;
        if (!(g > 0.0 && g < 1.0)) {
            return std::nullopt;
        }
        gammas.push_back(g);
    }
    return gammas;
}

std::optional<std::vector<double>> gamma_sequence_lemma(double N, double theta, double epsilon,
                                                        std::size_t K) {
    if (!(std::abs(N) >= 1.0)) {
        throw InvalidInput("gamma_sequence_lemma: |N| must be at least 1");
    }
    if (!(theta * N > 0.0)) {
        throw InvalidInput("gamma_sequence_lemma: theta must share the sign of N");
    }
    if (!(std::abs(theta) < 1.0)) {
        throw InvalidInput("gamma_sequence_lemma: |theta| must be below 1");
    }
    if (!(epsilon > 0.0)) {
        throw InvalidInput("gamma_sequence_lemma: epsilon must be positive");
    }
    std::vector<double> gammas;
    gammas.reserve(K);
    for (std::size_t k = 1; k <= K; ++k) {
        const double p = derive_P(gammas, k);
        const double g =
            (1.0 + epsilon) * (std::ldexp(1.0, static_cast<int>(k) - 1) / (theta * N) - p);
        if (!(g > 0.0 && g < 1.0)) {
            return std::nullopt;
        }
        gammas.push_back(g);
    }
    return gammas;
}

std::optional<ChainConfig> find_theta_window(ScenarioKind kind, std::size_t n, std::size_t K,
                                             double epsilon) {
    check_party_count(kind, n);
    if (K == 0) {
        throw InvalidInput("find_theta_window: K must be positive");
    }
    if (!(epsilon > 0.0)) {
        throw InvalidInput("find_theta_window: epsilon must be positive");
    }
    const bool w = kind == ScenarioKind::WSingle3;
    const double N = w ? 0.0 : scaling_constant(n, chain_kind(kind));
    const double target = w ? 0.0 : 1.0 / N;
    const double offset = w ? 0.5 : 0.5 * std::abs(target);
    // Step from the target toward zero: the only side where theta*N < 1.
    const double inward = w ? 1.0 : (target > 0 ? -1.0 : 1.0);

    for (int m = 0; m <= kGridRefinements; ++m) {
        const double theta = target + inward * offset * std::pow(kGridRatio, m);
        if (theta == target || (!w && !(std::abs(theta) < 1.0))) {
            break;  // the grid has collapsed onto the accumulation point
        }
        const auto gammas = w ? gamma_sequence_W(theta, epsilon, K)
                              : gamma_sequence_lemma(N, theta, epsilon, K);
        if (!gammas) {
            continue;
        }
        ChainConfig config{kind, n, K, theta, epsilon, *gammas};
        if (!config.feasible()) {
            continue;
        }
        bool violated = true;
        for (std::size_t k = 1; k <= K && violated; ++k) {
            const double value = w ? analytic_value_W(theta, *gammas, k)
                                   : analytic_value_GHZ(chain_kind(kind), n, theta, *gammas, k);
            violated = value > 1.0 + kViolationMargin;
        }
        if (violated) {
            return config;
        }
    }
    return std::nullopt;
}

}  // namespace seqmermin
