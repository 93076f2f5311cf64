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

#include <ostream>

namespace seqmermin {

/// Exit statuses of the command-line front end.
enum ExitStatus : int {
    kExitOk = 0,
    kExitNotViolated = 1,  // search failed, or some row not violated, or residual too large
    kExitBadInput = 2,
    kExitIoError = 3,
};

inline constexpr unsigned kDefaultVerifySeed = 7;

/// Entry point behind the `seqmermin` binary; verbs coeffs, simulate, verify
/// and certify. Writes results to `out` and diagnostics to `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace seqmermin
