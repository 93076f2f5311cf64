# Copyright 2026 The seqmermin Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import numpy as np
import pytest

import seqmermin


def ghz(n):
    psi = np.zeros(2**n, dtype=complex)
    psi[0] = psi[-1] = 1 / np.sqrt(2)
    return np.outer(psi, psi.conj())


def test_coefficients_n3():
    c, c_prime = seqmermin.coefficients(3)
    assert c == pytest.approx([0, 0.5, 0.5, 0, 0.5, 0, 0, -0.5], abs=1e-12)
    rc, rcp = seqmermin.recursive_coefficients(3)
    assert c == pytest.approx(rc, abs=1e-12)
    assert c_prime == pytest.approx(rcp, abs=1e-12)


def test_classical_bound():
    assert seqmermin.classical_max(4) == pytest.approx(1.0, abs=1e-12)


def test_pauli_and_effect_root():
    x = seqmermin.pauli(1)
    assert np.allclose(x, [[0, 1], [1, 0]])
    root = seqmermin.sqrt_effect(0.6, 2, -1)
    effect = (np.eye(2) - 0.6 * seqmermin.pauli(2)) / 2
    assert np.allclose(root @ root, effect, atol=1e-12)


def test_mermin_value_ghz3_maximal():
    s1 = seqmermin.pauli(1)
    s2 = seqmermin.pauli(2)
    value = seqmermin.mermin_value(ghz(3), [(s1, s2), (-s2, s1), (s1, s2)])
    assert value == pytest.approx(2.0, abs=1e-12)


def test_simulate_certified_chain():
    config = seqmermin.find_theta("ghz-single", 4, 5)
    assert config is not None
    assert config["theta"] < 0
    report = seqmermin.simulate("ghz-single", 4, config["theta"], config["gammas"], check_positivity=True)
    assert report["all_violated"]
    assert report["max_residual"] <= 1e-9
    assert len(report["rows"]) == 5
    assert report["min_eigenvalue"] >= -1e-10


def test_scaling_constant():
    assert seqmermin.scaling_constant(4) == pytest.approx(-1.0)
    assert seqmermin.scaling_constant(6, double_chain=True) == pytest.approx(-2.0)


def test_errors():
    with pytest.raises(ValueError):
        seqmermin.coefficients(0)
    with pytest.raises(seqmermin.SizeLimitExceeded):
        seqmermin.simulate("ghz-single", 13, 0.01, [0.5])
    with pytest.raises(seqmermin.InvalidInput):
        seqmermin.simulate("ghz-double", 3, 0.5, [0.5])
