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

#ifndef JAMGUARD_EXPERIMENTS_HPP
#define JAMGUARD_EXPERIMENTS_HPP

#include "jamguard/config.hpp"
#include "jamguard/result_table.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jamguard {

enum class ExperimentKind {
    cdp_vs_jammer_power,
    fap_vs_spread,
    se_vs_jammer_power,
    se_vs_antennas,
    validation_suite,
};

// CLI spelling: cdp, fap, se-jammer, se-antennas, validate.
const char *experiment_name(ExperimentKind kind);
std::optional<ExperimentKind> parse_experiment_kind(std::string_view name);

// The swept variable per kind: jammer training power in dBW (cdp), angular
// spread in radians (fap), q_t = q_d in dBW (se-jammer), antenna count
// (se-antennas). The validation suite ignores the sweep.
struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::cdp_vs_jammer_power;
    SystemConfig system;
    std::vector<double> sweep;
    int trials = 1000;
    int threads = 1;
    std::vector<int> detector_g_values;  // cdp, fap
    std::vector<int> subcarrier_counts;  // cdp

    void validate() const;
};

ExperimentSpec default_experiment(ExperimentKind kind);

// Overlays a JSON document on a spec. System keys sit at the top level (see
// config_io.hpp); an optional "experiment" object may set "sweep", "trials",
// "threads", "g_values" and "subcarrier_counts".
void apply_experiment_json(ExperimentSpec &spec, const nlohmann::json &doc);

nlohmann::json experiment_to_json(const ExperimentSpec &spec);

using ProgressFn = std::function<void(const std::string &)>;

ResultTable run_cdp_experiment(const ExperimentSpec &spec, const ProgressFn &progress = {});
ResultTable run_fap_experiment(const ExperimentSpec &spec, const ProgressFn &progress = {});
ResultTable run_se_vs_jammer_power(const ExperimentSpec &spec, const ProgressFn &progress = {});
ResultTable run_se_vs_antennas(const ExperimentSpec &spec, const ProgressFn &progress = {});
// Property campaign over all modules. Sample sizes scale with spec.trials
// (1000 gives 1e5 geometry draws, 2e5 noise-only energies, 1e4 moment draws).
// table.passed is false when any check fails.
ResultTable run_validation_suite(const ExperimentSpec &spec, const ProgressFn &progress = {});

ResultTable run_experiment(const ExperimentSpec &spec, const ProgressFn &progress = {});

// Every intermediate of one trial at the configured g and N_d, jammer on,
// suppression applied. RP indices are 1-based in the dump.
nlohmann::json single_trial_dump(const SystemConfig &config, std::uint64_t trial_index = 0);

// Arm label used by the detection sweeps, e.g. "g6_nd20".
std::string detector_arm(int min_pilots, int subcarriers);

} // namespace jamguard

#endif
