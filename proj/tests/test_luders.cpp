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

#include "seqmermin/luders.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "seqmermin/mermin.hpp"
#include "test_util.hpp"

using namespace seqmermin;
using seqmermin::testing::embed;
using seqmermin::testing::kron_all;
using seqmermin::testing::max_abs_diff;
using seqmermin::testing::random_density;
using seqmermin::testing::random_observable;

namespace {

ChainStepEffects single(std::size_t party, const Observable &m0, const Observable &m1) {
    return ChainStepEffects{{ChainSlot{party, {m0, m1}}}};
}

/// Direct 1/2 sum_{a,x} with eigendecomposition roots and full embedding.
ComplexMatrix four_effect_oracle(const DensityMatrix &rho, std::size_t party,
                                 const std::array<Observable, 2> &obs) {
    const std::size_t n = rho.n_parties();
    ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
    for (const Observable &m : obs) {
        for (double sign : {1.0, -1.0}) {
            const ComplexMatrix effect = (identity(2) + sign * ComplexMatrix(m)) / 2.0;
            const ComplexMatrix full = embed(n, party - 1, sqrt_psd(effect));
            out += full * rho.matrix() * full;
        }
    }
    return out / 2.0;
}

double string_expectation(const DensityMatrix &rho, const std::vector<Observable> &ops) {
    return expectation(rho, kron_all(ops));
}

}  // namespace

TEST(luders, effect_roots_square_to_effects) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const std::array<Observable, 2> obs{random_observable(rng), 0.3 * pauli(1 + trial % 3)};
        const auto roots = effect_roots(obs);
        for (int x = 0; x < 2; ++x) {
            for (int a = 0; a < 2; ++a) {
                const double sign = a == 0 ? 1.0 : -1.0;
                const Observable effect = (Observable::Identity() + sign * obs[x]) / 2.0;
                const Observable &r = roots[2 * x + a];
                ASSERT_LT(max_abs_diff(r * r, effect), 1e-12);
                ASSERT_TRUE(is_hermitian(r));
            }
        }
    }
}

TEST(luders, effect_roots_negative_multiple) {
    const auto roots = effect_roots({-0.7 * pauli(2), pauli(1)});
    ASSERT_LT(max_abs_diff(roots[0], sqrt_effect(0.7, 2, -1)), 1e-15);
    ASSERT_LT(max_abs_diff(roots[1], sqrt_effect(0.7, 2, 1)), 1e-15);
}

TEST(luders, identity_pair_is_identity_channel) {
    std::mt19937_64 rng(59);
    const DensityMatrix rho = random_density(rng, 3);
    const Observable id = Observable::Identity();
    const DensityMatrix out = luders_step_single(rho, single(3, id, id));
    ASSERT_LT(max_abs_diff(out.matrix(), rho.matrix()), 1e-14);

    const DensityMatrix out2 = luders_step_double(
        rho, ChainStepEffects{{ChainSlot{2, {id, id}}, ChainSlot{3, {id, id}}}});
    ASSERT_LT(max_abs_diff(out2.matrix(), rho.matrix()), 1e-14);
}

TEST(luders, single_matches_four_effect_oracle) {
    std::mt19937_64 rng(61);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t party = 1; party <= n; ++party) {
            const DensityMatrix rho = random_density(rng, n);
            const std::array<Observable, 2> obs{random_observable(rng), random_observable(rng)};
            const DensityMatrix out = luders_step_single(rho, single(party, obs[0], obs[1]));
            ASSERT_LT(max_abs_diff(out.matrix(), four_effect_oracle(rho, party, obs)), 1e-12);
            ASSERT_LE(out.trace_deviation(), 1e-12);
            ASSERT_GE(out.min_eigenvalue(), -1e-10);
        }
    }
}

TEST(luders, ghz3_shrink_factor) {
    const double gamma = 0.8;
    const DensityMatrix ghz = DensityMatrix::ghz(3);
    const DensityMatrix out = luders_step_single(ghz, single(3, pauli(1), gamma * pauli(2)));
    const std::vector<Observable> xxx{pauli(1), pauli(1), pauli(1)};
    const double before = string_expectation(ghz, xxx);
    const double factor = (1.0 + std::sqrt(1.0 - gamma * gamma)) / 2.0;
    ASSERT_NEAR(string_expectation(out, xxx), factor * before, 1e-10);
    ASSERT_NEAR(factor, 0.8, 1e-15);
}

TEST(luders, shrink_factor_law_on_random_states) {
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> uni(0.01, 0.99);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 3;
        const double gamma = uni(rng);
        const DensityMatrix rho = random_density(rng, n);
        const DensityMatrix out = luders_step_single(rho, single(n, pauli(1), gamma * pauli(2)));
        const double shrink1 = (1.0 + std::sqrt(1.0 - gamma * gamma)) / 2.0;
        for (int a = 1; a <= 3; ++a) {
            for (int b = 1; b <= 3; ++b) {
                const double x_before = string_expectation(rho, {pauli(a), pauli(b), pauli(1)});
                const double x_after = string_expectation(out, {pauli(a), pauli(b), pauli(1)});
                ASSERT_NEAR(x_after, shrink1 * x_before, 1e-10);
                const double y_before = string_expectation(rho, {pauli(a), pauli(b), pauli(2)});
                const double y_after = string_expectation(out, {pauli(a), pauli(b), pauli(2)});
                ASSERT_NEAR(y_after, 0.5 * y_before, 1e-10);
            }
        }
    }
}

TEST(luders, w_state_three_term_mixture) {
    const double gamma = 0.6;
    const DensityMatrix w = DensityMatrix::w_state(3);
    const DensityMatrix out = luders_step_single(w, single(3, pauli(3), gamma * pauli(1)));

    const ComplexMatrix z3 = embed(3, 2, pauli(3));
    const ComplexMatrix x3 = embed(3, 2, pauli(1));
    const double root = std::sqrt(1.0 - gamma * gamma);
    const ComplexMatrix mixture = (2.0 + root) / 4.0 * w.matrix() +
                                  0.25 * z3 * w.matrix() * z3 +
                                  (1.0 - root) / 4.0 * x3 * w.matrix() * x3;
    ASSERT_LT(max_abs_diff(out.matrix(), mixture), 1e-10);
    ASSERT_LT(max_abs_diff(out.matrix(), four_effect_oracle(w, 3, {pauli(3), gamma * pauli(1)})),
              1e-12);
}

TEST(luders, double_equals_two_singles) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho = random_density(rng, 4);
        const std::array<Observable, 2> a{random_observable(rng), random_observable(rng)};
        const std::array<Observable, 2> b{random_observable(rng), random_observable(rng)};
        const DensityMatrix both =
            luders_step_double(rho, ChainStepEffects{{ChainSlot{3, a}, ChainSlot{4, b}}});
        const DensityMatrix seq =
            luders_step_single(luders_step_single(rho, single(3, a[0], a[1])), single(4, b[0], b[1]));
        const DensityMatrix rev =
            luders_step_single(luders_step_single(rho, single(4, b[0], b[1])), single(3, a[0], a[1]));
        ASSERT_LT(max_abs_diff(both.matrix(), seq.matrix()), 1e-12);
        ASSERT_LT(max_abs_diff(both.matrix(), rev.matrix()), 1e-12);
    }
}

TEST(luders, ghz4_double_shrink_table) {
    const double gamma = 0.5;
    const DensityMatrix ghz = DensityMatrix::ghz(4);
    const DensityMatrix out = luders_step_double(
        ghz, ChainStepEffects{{ChainSlot{3, {pauli(2), pauli(2)}},
                               ChainSlot{4, {pauli(1), gamma * pauli(2)}}}});
    const double shrink0 = (1.0 + std::sqrt(1.0 - gamma * gamma)) / 2.0;
    for (int a = 1; a <= 2; ++a) {
        for (int b = 1; b <= 2; ++b) {
            const std::vector<Observable> s1{pauli(a), pauli(b), pauli(2), pauli(1)};
            const std::vector<Observable> s2{pauli(a), pauli(b), pauli(2), pauli(2)};
            ASSERT_NEAR(string_expectation(out, s1), shrink0 * string_expectation(ghz, s1), 1e-10);
            ASSERT_NEAR(string_expectation(out, s2), 0.5 * string_expectation(ghz, s2), 1e-10);
        }
    }
}

TEST(luders, sharp_sigma2_channel_is_idempotent) {
    std::mt19937_64 rng(73);
    for (double sign : {1.0, -1.0}) {
        const DensityMatrix rho = random_density(rng, 4);
        const ChainStepEffects sharp = single(3, sign * pauli(2), pauli(2));
        const DensityMatrix once = luders_step_single(rho, sharp);
        const DensityMatrix twice = luders_step_single(once, sharp);
        ASSERT_LT(max_abs_diff(once.matrix(), twice.matrix()), 1e-12);
    }
}

TEST(luders, evolve_chain_empty) {
    const DensityMatrix ghz = DensityMatrix::ghz(3);
    const auto states = evolve_chain(ghz, {});
    ASSERT_EQ(states.size(), 1u);
    ASSERT_EQ(states[0].matrix(), ghz.matrix());
}

TEST(luders, evolve_chain_ghz3_decay) {
    const std::vector<double> gammas{0.2, 0.3, 0.5};
    std::vector<ChainStepEffects> steps;
    double P = 1.0;
    for (double g : gammas) {
        steps.push_back(single(3, pauli(1), g * pauli(2)));
        P *= 1.0 + std::sqrt(1.0 - g * g);
    }
    const auto states = evolve_chain(DensityMatrix::ghz(3), steps);
    ASSERT_EQ(states.size(), 4u);
    const std::vector<Observable> xxx{pauli(1), pauli(1), pauli(1)};
    ASSERT_NEAR(string_expectation(states[3], xxx), P / 8.0, 1e-12);
    for (const auto &s : states) {
        ASSERT_LE(s.trace_deviation(), 1e-12);
        ASSERT_LE(hermitian_defect(s.matrix()), 1e-12);
        ASSERT_GE(s.min_eigenvalue(), -1e-10);
    }
}

TEST(luders, long_chain_stays_valid) {
    std::mt19937_64 rng(79);
    std::vector<ChainStepEffects> steps;
    for (int k = 0; k < 20; ++k) {
        steps.push_back(k % 2 ? single(4, random_observable(rng), random_observable(rng))
                              : ChainStepEffects{{ChainSlot{3, {random_observable(rng), pauli(2)}},
                                                  ChainSlot{4, {pauli(1), 0.9 * pauli(2)}}}});
    }
    for (const auto &s : evolve_chain(random_density(rng, 4), steps)) {
        ASSERT_LE(s.trace_deviation(), 1e-12);
        ASSERT_LE(hermitian_defect(s.matrix()), 1e-12);
        ASSERT_GE(s.min_eigenvalue(), -1e-10);
    }
}

TEST(luders, rejects_bad_slots) {
    const DensityMatrix ghz = DensityMatrix::ghz(4);
    ASSERT_THROW(luders_step_single(ghz, single(0, pauli(1), pauli(2))), InvalidInput);
    ASSERT_THROW(luders_step_single(ghz, single(5, pauli(1), pauli(2))), InvalidInput);
    ASSERT_THROW(luders_step_single(ghz, ChainStepEffects{}), InvalidInput);
    ASSERT_THROW(luders_step_single(ghz, single(4, 1.2 * pauli(1), pauli(2))), InvalidInput);
    ASSERT_THROW(luders_step_double(ghz, ChainStepEffects{{ChainSlot{2, {pauli(1), pauli(2)}},
                                                           ChainSlot{4, {pauli(1), pauli(2)}}}}),
                 InvalidInput);
    ASSERT_THROW(luders_step_double(ghz, ChainStepEffects{{ChainSlot{4, {pauli(1), pauli(2)}},
                                                           ChainSlot{3, {pauli(1), pauli(2)}}}}),
                 InvalidInput);
    ASSERT_THROW(luders_step(ghz, ChainStepEffects{}), InvalidInput);
}
