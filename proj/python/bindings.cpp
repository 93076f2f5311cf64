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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "seqmermin/io.hpp"
#include "seqmermin/scenarios.hpp"

namespace py = pybind11;
using namespace seqmermin;

namespace {

ScenarioKind kind_of(const std::string &tag) { return scenario_from_tag(tag); }

py::dict report_dict(const ViolationReport &report) {
    return py::module_::import("json").attr("loads")(to_json(report).dump());
}

py::object config_dict(const std::optional<ChainConfig> &config) {
    if (!config) {
        return py::none();
    }
    return py::module_::import("json").attr("loads")(to_json(*config).dump());
}

ChainConfig make_config(const std::string &scenario, std::size_t n, double theta,
                        const std::vector<double> &gammas, double epsilon) {
    return ChainConfig{kind_of(scenario), n, gammas.size(), theta, epsilon, gammas};
}

}  // namespace

PYBIND11_MODULE(_seqmermin, m) {
    m.doc() = "Sequential Mermin-inequality violation simulator";

    auto invalid = py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<SizeLimitExceeded>(m, "SizeLimitExceeded", invalid.ptr());

    m.def("pauli", [](int index) { return ComplexMatrix(pauli(index)); }, py::arg("index"));
    m.def("sqrt_effect",
          [](double gamma, int index, int sign) { return ComplexMatrix(sqrt_effect(gamma, index, sign)); },
          py::arg("gamma"), py::arg("pauli_index"), py::arg("sign"));

    m.def(
        "coefficients",
        [](std::size_t n) {
            const MerminCoefficients c = closed_form_coefficients(n);
            return py::make_tuple(c.c, c.c_prime);
        },
        py::arg("n"), "Closed-form (c, c_prime) lists indexed by v, party 1 most significant.");
    m.def(
        "recursive_coefficients",
        [](std::size_t n) {
            const MerminCoefficients c = recursive_coefficients(n);
            return py::make_tuple(c.c, c.c_prime);
        },
        py::arg("n"));
    m.def("classical_max", &classical_deterministic_max, py::arg("n"));

    m.def(
        "mermin_value",
        [](const ComplexMatrix &rho, const std::vector<std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd>> &settings) {
            std::vector<std::array<Observable, 2>> pairs;
            for (const auto &[a, b] : settings) {
                pairs.push_back({a, b});
            }
            const auto n = pairs.size();
            return mermin_value(DensityMatrix(n, rho), ObservableAssignment(std::move(pairs)));
        },
        py::arg("rho"), py::arg("settings"),
        "<M_n> for a density matrix and one (M_0, M_1) pair per party.");

    m.def(
        "scaling_constant",
        [](std::size_t n, bool double_chain) {
            return scaling_constant(n, double_chain ? ChainKind::Double : ChainKind::Single);
        },
        py::arg("n"), py::arg("double_chain") = false);

    m.def(
        "find_theta",
        [](const std::string &scenario, std::size_t n, std::size_t K, double epsilon) {
            return config_dict(find_theta_window(kind_of(scenario), n, K, epsilon));
        },
        py::arg("scenario"), py::arg("n"), py::arg("K"), py::arg("epsilon") = kDefaultEpsilon,
        "Searched configuration as a dict, or None.");

    m.def(
        "analytic_value",
        [](const std::string &scenario, std::size_t n, double theta, const std::vector<double> &gammas,
           std::size_t k) { return analytic_value(kind_of(scenario), n, theta, gammas, k); },
        py::arg("scenario"), py::arg("n"), py::arg("theta"), py::arg("gammas"), py::arg("k"));

    m.def(
        "simulate",
        [](const std::string &scenario, std::size_t n, double theta, const std::vector<double> &gammas,
           double epsilon, bool brute_force, bool check_positivity) {
            RunOptions options;
            options.brute_force = brute_force;
            options.check_positivity = check_positivity;
            return report_dict(run_scenario(make_config(scenario, n, theta, gammas, epsilon), options));
        },
        py::arg("scenario"), py::arg("n"), py::arg("theta"), py::arg("gammas"),
        py::arg("epsilon") = kDefaultEpsilon, py::arg("brute_force") = true,
        py::arg("check_positivity") = false);
}
