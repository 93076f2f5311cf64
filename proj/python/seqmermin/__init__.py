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

"""Sequential sharing of Mermin-inequality violations."""

from seqmermin._seqmermin import (
    InvalidInput,
    SizeLimitExceeded,
    analytic_value,
    classical_max,
    coefficients,
    find_theta,
    mermin_value,
    pauli,
    recursive_coefficients,
    scaling_constant,
    simulate,
    sqrt_effect,
)

__all__ = [
    "InvalidInput",
    "SizeLimitExceeded",
    "analytic_value",
    "classical_max",
    "coefficients",
    "find_theta",
    "mermin_value",
    "pauli",
    "recursive_coefficients",
    "scaling_constant",
    "simulate",
    "sqrt_effect",
]
