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
#include <vector>

#include "seqmermin/linalg.hpp"

namespace seqmermin {

/// One measuring party in a chain step: its 1-based party index and its two
/// observables. The POVM effects are (I +/- M_x) / 2.
struct ChainSlot {
    std::size_t party = 0;
    std::array<Observable, 2> observables;
};

/// The parties that measure and forward the state at one step of a chain.
/// One slot for a single chain, two for a double chain.
struct ChainStepEffects {
    std::vector<ChainSlot> slots;
};

/// Square roots of the four effects (a, x) of one slot, ordered
/// [x=0,a=0], [x=0,a=1], [x=1,a=0], [x=1,a=1]. Uses the closed form when the
/// observable is a real multiple of a Pauli matrix.
std::array<Observable, 4> effect_roots(const std::array<Observable, 2> &observables);

/// rho -> 1/2 sum_{a,x} (I (x) sqrt(M_{a|x})) rho (I (x) sqrt(M_{a|x})) with the
/// single slot acting on its party.
DensityMatrix luders_step_single(const DensityMatrix &rho, const ChainStepEffects &effects);

/// rho -> 1/4 sum over both slots' (a, x) of the doubly dressed conjugation.
/// Slots must be parties n-1 and n, in that order.
DensityMatrix luders_step_double(const DensityMatrix &rho, const ChainStepEffects &effects);

/// Dispatches on the slot count.
DensityMatrix luders_step(const DensityMatrix &rho, const ChainStepEffects &effects);

/// [rho0, rho after step 1, ...]: one state per chain position.
std::vector<DensityMatrix> evolve_chain(const DensityMatrix &rho0,
                                        const std::vector<ChainStepEffects> &steps);

}  // namespace seqmermin
