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
#include <optional>
#include <string>

#include "seqmermin/mermin.hpp"

namespace seqmermin {

namespace {

constexpr double kPauliMatchTol = 1e-14;

struct ScaledPauli {
    int index;
    double scale;
};

// Recognizes m = scale * sigma_index with real scale.
std::optional<ScaledPauli> as_scaled_pauli(const Observable &m) {
    for (int index = 1; index <= 3; ++index) {
        const Observable p = pauli(index);
        // Tr[sigma m] / 2 recovers the coefficient.
        const Complex coef = (p * m).trace() * 0.5;
        if (std::abs(coef.imag()) > kPauliMatchTol) {
            continue;
        }
        if ((m - coef.real() * p).cwiseAbs().maxCoeff() <= kPauliMatchTol) {
            return ScaledPauli{index, coef.real()};
        }
    }
    return std::nullopt;
}

Observable effect_root(const Observable &m, int sign) {
    if (const auto sp = as_scaled_pauli(m); sp && std::abs(sp->scale) <= 1.0) {
        const int s = sp->scale < 0 ? -sign : sign;
        return sqrt_effect(std::abs(sp->scale), sp->index, s);
    }
    const Observable effect = (Observable::Identity() + static_cast<double>(sign) * m) * 0.5;
    return sqrt_psd(effect);
}

void check_slot(const ChainSlot &slot, std::size_t n) {
    if (slot.party < 1 || slot.party > n) {
        throw InvalidInput("chain slot party " + std::to_string(slot.party) +
                           " outside 1.." + std::to_string(n));
    }
    check_observable(slot.observables[0]);
    check_observable(slot.observables[1]);
}

DensityMatrix finish(const DensityMatrix &rho, const ComplexMatrix &out) {
    return DensityMatrix(rho.n_parties(), hermitian_part(out));
}

}  // namespace

std::array<Observable, 4> effect_roots(const std::array<Observable, 2> &observables) {
    return {effect_root(observables[0], 1), effect_root(observables[0], -1),
            effect_root(observables[1], 1), effect_root(observables[1], -1)};
}

DensityMatrix luders_step_single(const DensityMatrix &rho, const ChainStepEffects &effects) {
    if (effects.slots.size() != 1) {
        throw InvalidInput("luders_step_single: exactly one slot required");
    }
    const ChainSlot &slot = effects.slots.front();
    const std::size_t n = rho.n_parties();
    check_slot(slot, n);
    ComplexMatrix out = ComplexMatrix::Zero(rho.matrix().rows(), rho.matrix().cols());
    for (const Observable &root : effect_roots(slot.observables)) {
        if (slot.party == n) {
            out += conjugate_tail(rho.matrix(), root);
        } else {
            out += conjugate_local(rho.matrix(), slot.party - 1, root);
        }
    }
    return finish(rho, out * 0.5);
}

DensityMatrix luders_step_double(const DensityMatrix &rho, const ChainStepEffects &effects) {
    const std::size_t n = rho.n_parties();
    if (effects.slots.size() != 2 || n < 2 || effects.slots[0].party != n - 1 ||
        effects.slots[1].party != n) {
        throw InvalidInput("luders_step_double: slots must be parties n-1 and n");
    }
    check_slot(effects.slots[0], n);
    check_slot(effects.slots[1], n);
    const auto first = effect_roots(effects.slots[0].observables);
    const auto second = effect_roots(effects.slots[1].observables);
    ComplexMatrix out = ComplexMatrix::Zero(rho.matrix().rows(), rho.matrix().cols());
    for (const Observable &a : first) {
        for (const Observable &b : second) {
            out += conjugate_tail(rho.matrix(), kron(a, b));
        }
    }
    return finish(rho, out * 0.25);
}

DensityMatrix luders_step(const DensityMatrix &rho, const ChainStepEffects &effects) {
    switch (effects.slots.size()) {
        case 1:
            return luders_step_single(rho, effects);
        case 2:
            return luders_step_double(rho, effects);
        default:
            throw InvalidInput("luders_step: a chain step has one or two slots");
    }
}

std::vector<DensityMatrix> evolve_chain(const DensityMatrix &rho0,
                                        const std::vector<ChainStepEffects> &steps) {
    std::vector<DensityMatrix> states{rho0};
    states.reserve(steps.size() + 1);
    for (const auto &step : steps) {
        states.push_back(luders_step(states.back(), step));
    }
    return states;
}

}  // namespace seqmermin
