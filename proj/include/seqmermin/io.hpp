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
#include <string>

#include <nlohmann/json.hpp>

#include "seqmermin/scenarios.hpp"

namespace seqmermin {

/// Rounds to 15 significant digits; JSON and CSV output go through this so
/// every real is printed with at most 15 significant digits.
double round15(double x);
std::string format15(double x);

nlohmann::json to_json(const MerminCoefficients &coeffs);
nlohmann::json to_json(const ChainConfig &config);
nlohmann::json to_json(const ViolationReport &report);

/// Parses the {"scenario", "n", "K", "theta", "epsilon", "gammas"} object.
ChainConfig chain_config_from_json(const nlohmann::json &j);

/// v,c,c_prime
void write_csv(std::ostream &out, const MerminCoefficients &coeffs);

/// scenario,n,K,theta,epsilon,k,gamma_k,P_k,I_analytic,I_bruteforce,violated
void write_csv(std::ostream &out, const ViolationReport &report);

}  // namespace seqmermin
