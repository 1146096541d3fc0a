// SPDX-License-Identifier: Apache-2.0
//
// jamguard: direction-based jamming detection and suppression for mmWave massive MIMO
// Copyright (C) 2026 The jamguard authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Python extension jamguard._core. Configs and results cross the boundary as
// JSON text; the pure-Python wrapper in jamguard/__init__.py decodes them.

#include "jamguard/angular_grid.hpp"
#include "jamguard/config_io.hpp"
#include "jamguard/experiments.hpp"
#include "jamguard/jamming_detector.hpp"
#include "jamguard/rp_detector.hpp"
#include "jamguard/suppression.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace jamguard;

namespace {

SystemConfig config_from_text(const std::string &text)
{
    return system_config_from_json(nlohmann::json::parse(text.empty() ? "{}" : text));
}

py::tuple run(const std::string &kind_name, const std::string &doc_text, int threads)
{
    const auto kind = parse_experiment_kind(kind_name);
    if (!kind)
        throw ConfigError("unknown experiment \"" + kind_name + "\"");
    auto spec = default_experiment(*kind);
    apply_experiment_json(spec, nlohmann::json::parse(doc_text.empty() ? "{}" : doc_text));
    spec.threads = threads;
    spec.validate();
    ResultTable table;
    {
        py::gil_scoped_release release;
        table = run_experiment(spec);
    }
    return py::make_tuple(to_csv(table), table.metadata.dump(), table.passed);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Monte-Carlo core of the jamming detection and suppression simulator";
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def("version", [] { return std::string(JAMGUARD_VERSION); });
    m.def("default_config_json", [] { return system_config_to_json(SystemConfig{}).dump(); });
    m.def("normalize_config_json",
          [](const std::string &text) { return system_config_to_json(config_from_text(text)).dump(); });
    m.def("run_experiment_json", &run, py::arg("kind"), py::arg("doc"), py::arg("threads") = 1);
    m.def(
        "single_trial_json",
        [](const std::string &text, std::uint64_t index) {
            return single_trial_dump(config_from_text(text), index).dump();
        },
        py::arg("config"), py::arg("trial_index") = 0);

    m.def("collision_probability_bound", &collision_probability_bound, py::arg("users"),
          py::arg("min_pilots"), py::arg("spread"));
    m.def("threshold_for_fap", &threshold_for_fap, py::arg("subcarriers"), py::arg("noise_power"),
          py::arg("fap_target"));
    m.def(
        "grid_angles",
        [](int antennas) {
            const AngularGrid grid{ArrayGeometry(antennas)};
            return std::vector<double>(grid.angles().begin(), grid.angles().end());
        },
        py::arg("antennas"));
    m.def(
        "steering_vector", [](double theta, int antennas) { return steering_vector(theta, ArrayGeometry(antennas)); },
        py::arg("theta"), py::arg("antennas"));
    m.def(
        "to_angular_domain",
        [](const CMatrix &y) { return to_angular_domain(y, AngularGrid(ArrayGeometry(static_cast<int>(y.rows())))); },
        py::arg("y"));
    m.def(
        "detect_jammer",
        [](const std::vector<IndexSet> &sets, int rp_count, int min_pilots) {
            const auto outcome = detect_jammer(rp_occurrence_counts(sets, rp_count), min_pilots);
            return py::make_tuple(outcome.jammer_detected, outcome.common_set, outcome.occurrence_counts);
        },
        py::arg("rp_sets"), py::arg("rp_count"), py::arg("min_pilots"));
    m.def(
        "user_rp_set",
        [](const IndexSet &pilot_set, const IndexSet &common_set) {
            const auto s = user_rp_set(pilot_set, common_set);
            return s.rps;
        },
        py::arg("pilot_set"), py::arg("common_set"));
}
